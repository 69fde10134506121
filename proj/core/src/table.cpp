#include "pnr/table.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace pnr {

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size())
        throw std::invalid_argument("Table::add_row: row width does not match the header");
    rows.push_back(std::move(row));
}

TableFormat parse_table_format(const std::string& name) {
    if (name == "csv") return TableFormat::csv;
    if (name == "json") return TableFormat::json;
    throw std::invalid_argument("unknown table format: " + name);
}

std::string format_cell(const Cell& cell) {
    if (const auto* i = std::get_if<int64_t>(&cell)) return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&cell)) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.12g", *d);
        return buf;
    }
    if (const auto* b = std::get_if<bool>(&cell)) return *b ? "true" : "false";
    return std::get<std::string>(cell);
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default: out += c;
        }
    }
    return out;
}

std::string json_cell(const Cell& cell) {
    if (std::holds_alternative<std::string>(cell))
        return "\"" + json_escape(std::get<std::string>(cell)) + "\"";
    return format_cell(cell); // numbers and booleans share the CSV literals
}

} // namespace

std::string to_csv(const Table& table) {
    std::ostringstream os;
    for (size_t c = 0; c < table.columns.size(); ++c) {
        if (c) os << ',';
        os << csv_escape(table.columns[c]);
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) os << ',';
            os << csv_escape(format_cell(row[c]));
        }
        os << '\n';
    }
    return os.str();
}

std::string to_json(const Table& table) {
    std::ostringstream os;
    os << "[\n";
    for (size_t r = 0; r < table.rows.size(); ++r) {
        os << "  {";
        for (size_t c = 0; c < table.columns.size(); ++c) {
            if (c) os << ", ";
            os << "\"" << json_escape(table.columns[c]) << "\": " << json_cell(table.rows[r][c]);
        }
        os << (r + 1 < table.rows.size() ? "},\n" : "}\n");
    }
    os << "]\n";
    return os.str();
}

std::string to_json(const RunManifest& m) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"tool\": \"" << json_escape(m.tool) << "\",\n";
    os << "  \"version\": \"" << json_escape(m.version) << "\",\n";
    os << "  \"command\": \"" << json_escape(m.command) << "\",\n";
    os << "  \"timestamp\": \"" << json_escape(m.timestamp) << "\",\n";
    os << "  \"params\": " << (m.params_json.empty() ? "{}" : m.params_json) << ",\n";
    os << "  \"seeds\": [";
    for (size_t i = 0; i < m.seeds.size(); ++i) os << (i ? ", " : "") << m.seeds[i];
    os << "],\n";
    os << "  \"max_truncation_bound\": " << format_cell(Cell{m.max_truncation_bound}) << ",\n";
    os << "  \"output\": {\"path\": \"" << json_escape(m.output_path) << "\", \"format\": \""
       << json_escape(m.output_format) << "\", \"rows\": " << m.row_count << "}\n";
    os << "}\n";
    return os.str();
}

std::string manifest_path_for(const std::string& table_path) {
    return table_path + ".manifest.json";
}

std::string current_utc_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

void write_table(const Table& table, TableFormat format, const std::string& path,
                 const RunManifest& manifest) {
    const std::string body = format == TableFormat::csv ? to_csv(table) : to_json(table);
    if (path.empty()) {
        std::cout << body;
        return;
    }
    {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("write_table: cannot open " + path);
        out << body;
        if (!out) throw std::runtime_error("write_table: write failed for " + path);
    }
    RunManifest m = manifest;
    m.output_path = path;
    m.output_format = format == TableFormat::csv ? "csv" : "json";
    m.row_count = table.rows.size();
    const std::string mpath = manifest_path_for(path);
    std::ofstream mout(mpath, std::ios::binary);
    if (!mout) throw std::runtime_error("write_table: cannot open " + mpath);
    mout << to_json(m);
    if (!mout) throw std::runtime_error("write_table: write failed for " + mpath);
}

} // namespace pnr
