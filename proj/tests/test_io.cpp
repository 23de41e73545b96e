#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "hardyz/io.hpp"

using namespace hardyz::io;
namespace fs = std::filesystem;

namespace {
Table sample_table() {
    Table t;
    t.columns = {"T", "value", "err"};
    t.rows = {
        {100.0, -2.771318200205355, 1e-9},
        {1e5, 0.1234567890123456789, std::numeric_limits<double>::quiet_NaN()},
        {-0.0, 1.0 / 3.0, 2.2250738585072014e-308},
    };
    return t;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
} // namespace

TEST_CASE("format_double round-trips") {
    for (double v : {1.0, -1.0 / 3.0, 1e-300, 6.02214076e23, 0.1}) {
        std::string s = format_double(v);
        CHECK(std::stod(s) == v);
    }
    CHECK(format_double(0.0) == "0");
}

TEST_CASE("csv round-trip is lossless") {
    Table t = sample_table();
    Table back = from_csv(to_csv(t));
    REQUIRE(back.columns == t.columns);
    REQUIRE(back.rows.size() == t.rows.size());
    for (size_t i = 0; i < t.rows.size(); ++i) {
        for (size_t j = 0; j < t.columns.size(); ++j) {
            double a = t.rows[i][j], b = back.rows[i][j];
            if (std::isnan(a))
                CHECK(std::isnan(b));
            else
                CHECK(a == b);
        }
    }
}

TEST_CASE("json round-trip is lossless and keeps column order") {
    Table t = sample_table();
    std::string j = to_json(t);
    Table back = from_json(j);
    REQUIRE(back.columns == t.columns);
    REQUIRE(back.rows.size() == t.rows.size());
    for (size_t i = 0; i < t.rows.size(); ++i) {
        for (size_t jx = 0; jx < t.columns.size(); ++jx) {
            double a = t.rows[i][jx], b = back.rows[i][jx];
            if (std::isnan(a))
                CHECK(std::isnan(b));
            else
                CHECK(a == b);
        }
    }
    // NaN must map to JSON null, not a bare NaN token
    CHECK(j.find("null") != std::string::npos);
    CHECK(j.find("nan") == std::string::npos);
}

TEST_CASE("csv layout") {
    Table t;
    t.columns = {"a", "b"};
    t.rows = {{1.0, 2.5}};
    std::string s = to_csv(t);
    CHECK(s == "a,b\n1,2.5\n");
}

TEST_CASE("emit writes atomically") {
    fs::path dir = fs::temp_directory_path() / "hardyz_io_test";
    fs::create_directories(dir);
    fs::path out = dir / "table.csv";
    Table t = sample_table();
    emit(t, Format::csv, out);
    CHECK(fs::exists(out));
    Table back = from_csv(slurp(out));
    CHECK(back.columns == t.columns);
    // no stray temp files left behind
    int files = 0;
    for (auto& e : fs::directory_iterator(dir)) {
        (void)e;
        ++files;
    }
    CHECK(files == 1);
    emit(t, Format::json, out); // overwrite in place
    Table back2 = from_json(slurp(out));
    CHECK(back2.columns == t.columns);
    fs::remove_all(dir);
}

TEST_CASE("from_csv rejects ragged rows") {
    CHECK_THROWS(from_csv("a,b\n1,2\n3\n"));
}
