// io.hpp — Deterministic CSV/JSON emission for trajectory tables

#pragma once

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cavityqfi::io {

/// %.17g: shortest fixed format that round-trips every double exactly.
/// Locale-independent ('.' decimal separator always).
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    std::size_t column_index(const std::string& name) const {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i] == name)
                return i;
        throw std::invalid_argument("Table: unknown column '" + name + "'");
    }
};

/// RFC 4180-style CSV: comma-separated, header row, "\n" line ends, no quoting
/// needed (column names and numbers never contain commas).
inline void write_csv(std::ostream& os, const Table& table) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i)
            os << ',';
        os << table.columns[i];
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                os << ',';
            os << format_double(row[i]);
        }
        os << '\n';
    }
}

} // namespace cavityqfi::io
