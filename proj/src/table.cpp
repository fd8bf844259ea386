#include "dicke/table.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dicke {

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size())
        throw std::invalid_argument("Table: row width does not match the header");
    rows.push_back(std::move(row));
}

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw std::invalid_argument("unknown output format: " + name);
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

namespace {

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string quoted = "\"";
    for (const char c : field) {
        quoted += c;
        if (c == '"') quoted += '"';
    }
    quoted += '"';
    return quoted;
}

std::string csv_cell(const Cell& cell) {
    switch (cell.index()) {
        case 0: return "";
        case 1: return format_double(std::get<double>(cell));
        case 2: return std::to_string(std::get<std::int64_t>(cell));
        case 3: return std::get<bool>(cell) ? "true" : "false";
        default: return csv_quote(std::get<std::string>(cell));
    }
}

nlohmann::ordered_json json_cell(const Cell& cell) {
    switch (cell.index()) {
        case 0: return nullptr;
        case 1: return std::get<double>(cell);
        case 2: return std::get<std::int64_t>(cell);
        case 3: return std::get<bool>(cell);
        default: return std::get<std::string>(cell);
    }
}

}  // namespace

void emit(const Table& table, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::Csv) {
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            if (c > 0) out << ',';
            out << csv_quote(table.columns[c]);
        }
        out << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c > 0) out << ',';
                out << csv_cell(row[c]);
            }
            out << '\n';
        }
        return;
    }

    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c) obj[table.columns[c]] = json_cell(row[c]);
        array.push_back(std::move(obj));
    }
    out << array.dump(2) << '\n';
}

std::string emit_string(const Table& table, OutputFormat format) {
    std::ostringstream out;
    emit(table, format, out);
    return out.str();
}

void emit_file(const Table& table, OutputFormat format, const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    emit(table, format, out);
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace dicke
