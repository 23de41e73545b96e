#include "hardyz/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hardyz::io {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string to_csv(const Table& table) {
    std::ostringstream out;
    for (size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out << ',';
        out << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << format_double(row[i]);
        }
        out << '\n';
    }
    return out.str();
}

std::string to_json(const Table& table) {
    std::ostringstream out;
    out << "[";
    for (size_t r = 0; r < table.rows.size(); ++r) {
        out << (r ? ",\n " : "\n ") << "{";
        for (size_t i = 0; i < table.rows[r].size(); ++i) {
            if (i) out << ", ";
            double v = table.rows[r][i];
            out << '"' << table.columns[i] << "\": ";
            if (std::isfinite(v))
                out << format_double(v);
            else
                out << "null";
        }
        out << "}";
    }
    out << "\n]\n";
    return out.str();
}

Table from_csv(const std::string& text) {
    Table table;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (header) {
            table.columns = cells;
            header = false;
            continue;
        }
        if (cells.size() != table.columns.size())
            throw std::runtime_error("io: csv row width does not match header");
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& c : cells) row.push_back(std::strtod(c.c_str(), nullptr));
        table.rows.push_back(std::move(row));
    }
    return table;
}

Table from_json(const std::string& text) {
    Table table;
    auto parsed = nlohmann::ordered_json::parse(text);
    for (const auto& obj : parsed) {
        if (table.columns.empty())
            for (auto it = obj.begin(); it != obj.end(); ++it)
                table.columns.push_back(it.key());
        std::vector<double> row;
        for (const auto& col : table.columns) {
            const auto& v = obj.at(col);
            row.push_back(v.is_null() ? std::numeric_limits<double>::quiet_NaN()
                                      : v.get<double>());
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

void emit(const Table& table, Format format, const std::filesystem::path& path) {
    namespace fs = std::filesystem;
    fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
    fs::path tmp = dir / (path.filename().string() + ".tmp");
    try {
        {
            std::ofstream out(tmp, std::ios::trunc);
            if (!out)
                throw std::runtime_error("io: cannot open " + tmp.string() +
                                         " for writing");
            out << (format == Format::csv ? to_csv(table) : to_json(table));
            if (!out)
                throw std::runtime_error("io: write failed for " + tmp.string());
        }
        fs::rename(tmp, path);
    } catch (...) {
        std::error_code ec;
        fs::remove(tmp, ec);
        throw;
    }
}

} // namespace hardyz::io
