#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace hardyz::io {

// Flat numeric table: one named column set, rows of doubles.  All numbers
// are rendered with %.17g so CSV and JSON round-trip losslessly.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

enum class Format { csv, json };

std::string format_double(double v);

std::string to_csv(const Table& table);
std::string to_json(const Table& table);

Table from_csv(const std::string& text);
Table from_json(const std::string& text);

// Writes to a temp file in the target directory, then renames; a partial
// output file is never left behind.
void emit(const Table& table, Format format, const std::filesystem::path& path);

} // namespace hardyz::io
