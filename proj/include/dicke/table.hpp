// table.hpp — Rectangular result tables and their CSV / JSON-lines encodings
//
// Floats are written with 17 significant digits so every value round-trips
// bit-exactly. Metadata travels with the data: '#'-prefixed `key=value` lines
// ahead of the CSV header, or a leading {"metadata": {...}} object in JSONL.

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dicke/config.hpp"

namespace dicke {

using Cell = std::variant<double, std::string>;

inline constexpr const char* artifact_name = "dicke";
inline constexpr const char* artifact_version = "1.0.0";

struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, std::string>> metadata;

    // Throws std::invalid_argument when the row width differs from the header.
    void add_row(std::vector<Cell> row);
};

std::string format_double(double v);

// Artifact identity, then the subcommand and the configuration echo.
std::vector<std::pair<std::string, std::string>> run_metadata(const RunConfig& config);

// Throws std::runtime_error if the stream reports a write failure.
void emit_csv(const ResultTable& table, std::ostream& out);
void emit_jsonl(const ResultTable& table, std::ostream& out);
void emit(const ResultTable& table, OutputFormat format, std::ostream& out);

// Inverse of emit_csv. Fields that parse completely as numbers come back as
// doubles, everything else as strings.
ResultTable parse_csv(std::string_view text);

// Rebuilds the run configuration recorded in a table's metadata.
RunConfig config_from_metadata(const ResultTable& table);

} // namespace dicke
