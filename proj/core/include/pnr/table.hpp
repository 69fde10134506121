#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace pnr {

/// One table cell. Doubles are rendered with 12 significant digits in both
/// CSV and JSON so the two encodings agree value for value.
using Cell = std::variant<int64_t, double, std::string, bool>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

enum class TableFormat { csv, json };

TableFormat parse_table_format(const std::string& name);

/// Canonical rendering of one cell (%.12g for doubles, '.' decimal separator).
std::string format_cell(const Cell& cell);

/// Header row, comma delimiter, '\n' newlines, no trailing delimiter.
std::string to_csv(const Table& table);

/// Array of objects keyed by the column names, same numeric literals as CSV.
std::string to_json(const Table& table);

struct RunManifest {
    std::string tool = "pnr";
    std::string version;
    std::string command;
    std::string timestamp; // ISO 8601 UTC; excluded from reproducibility
    std::string params_json; // resolved parameter object, mirrors the CLI flags
    std::vector<uint64_t> seeds;
    double max_truncation_bound = 0.0;
    std::string output_path;
    std::string output_format;
    size_t row_count = 0;
};

std::string to_json(const RunManifest& manifest);

/// Writes the table to `path` (or stdout when empty) and, for file
/// destinations, the sibling manifest "<path>.manifest.json". I/O failures
/// carry the offending path.
void write_table(const Table& table, TableFormat format, const std::string& path,
                 const RunManifest& manifest);

/// Sibling manifest path for a table destination.
std::string manifest_path_for(const std::string& table_path);

std::string current_utc_timestamp();

} // namespace pnr
