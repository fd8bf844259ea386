// table.hpp — Column-ordered result tables and deterministic CSV/JSON emission.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace dicke {

// Empty cells render as an empty CSV field / JSON null.
using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    // Throws std::invalid_argument if the row width disagrees with columns.
    void add_row(std::vector<Cell> row);
};

enum class OutputFormat { Csv, Json };

OutputFormat parse_format(const std::string& name);  // "csv" | "json"

// CSV: fixed header row, RFC-4180 quoting, LF line endings, doubles printed
// with 12 significant digits.  JSON: array of row objects with the column
// names as keys.  Both are byte-identical for identical inputs.
void emit(const Table& table, OutputFormat format, std::ostream& out);

// Convenience: serialize to a string / write to a file (throws on I/O failure).
std::string emit_string(const Table& table, OutputFormat format);
void emit_file(const Table& table, OutputFormat format, const std::string& path);

// 12-significant-digit float formatting used by the CSV writer.
std::string format_double(double value);

}  // namespace dicke
