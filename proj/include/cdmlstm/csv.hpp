#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cdmlstm {

// One parsed cell. Cleaning decides what to do with non-numbers; parsing
// never drops anything.
struct Cell {
    double num = 0.0;
    bool is_number = false;  // finite numeric value in `num`
    bool missing = false;    // "", "NaN"/"nan", or a non-finite numeric
    std::string token;       // original text when not a finite number
};

struct RawRecord {
    std::string event_id;
    std::vector<Cell> cells;  // aligned with RawTable::header
};

// Parse result: all source columns verbatim, rows in source order.
struct RawTable {
    std::vector<std::string> header;
    std::vector<RawRecord> rows;

    std::optional<std::size_t> column(std::string_view name) const;
};

struct ParseOptions {
    bool skip_bad_rows = false;  // default: fail fast on malformed rows
    std::string id_column = "event_id";
};

struct ParseReport {
    std::size_t rows_in = 0;
    std::size_t rows_kept = 0;
    std::vector<std::size_t> bad_lines;  // 1-based source line numbers
};

struct CsvError : std::runtime_error {
    explicit CsvError(const std::string& msg, std::size_t line = 0)
        : std::runtime_error(msg), line(line) {}
    std::size_t line;
};

RawTable parse_kelvins_csv(std::istream& in, const ParseOptions& opts = {},
                           ParseReport* report = nullptr);
RawTable parse_kelvins_csv_file(const std::string& path, const ParseOptions& opts = {},
                                ParseReport* report = nullptr);

}  // namespace cdmlstm
