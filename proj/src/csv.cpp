#include "cdmlstm/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

namespace cdmlstm {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

bool is_nan_spelling(std::string_view s) {
    return s == "NaN" || s == "nan" || s == "NAN";
}

Cell parse_cell(std::string_view raw) {
    Cell c;
    const std::string_view s = trim(raw);
    if (s.empty() || is_nan_spelling(s)) {
        c.missing = true;
        c.token.assign(s);
        return c;
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc() && ptr == s.data() + s.size()) {
        if (std::isfinite(value)) {
            c.num = value;
            c.is_number = true;
        } else {
            c.missing = true;  // "inf" etc: not a finite real
            c.token.assign(s);
        }
        return c;
    }
    c.token.assign(s);
    return c;
}

void split_line(const std::string& line, std::vector<std::string_view>& out) {
    out.clear();
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            out.emplace_back(line.data() + start, i - start);
            start = i + 1;
        }
    }
}

}  // namespace

std::optional<std::size_t> RawTable::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    return std::nullopt;
}

RawTable parse_kelvins_csv(std::istream& in, const ParseOptions& opts, ParseReport* report) {
    RawTable table;
    std::string line;
    if (!std::getline(in, line)) {
        throw CsvError("csv: missing header row", 0);
    }
    std::vector<std::string_view> fields;
    split_line(line, fields);
    for (auto f : fields) table.header.emplace_back(trim(f));
    if (table.header.empty() || (table.header.size() == 1 && table.header[0].empty())) {
        throw CsvError("csv: empty header row", 1);
    }

    const auto id_col = table.column(opts.id_column);

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        if (report) ++report->rows_in;
        split_line(line, fields);
        if (fields.size() != table.header.size()) {
            if (opts.skip_bad_rows) {
                if (report) report->bad_lines.push_back(line_no);
                continue;
            }
            std::ostringstream msg;
            msg << "csv: line " << line_no << ": expected " << table.header.size()
                << " columns, got " << fields.size();
            throw CsvError(msg.str(), line_no);
        }
        RawRecord rec;
        rec.cells.reserve(fields.size());
        for (auto f : fields) rec.cells.push_back(parse_cell(f));
        if (id_col) {
            const Cell& idc = rec.cells[*id_col];
            if (idc.is_number && idc.num == std::floor(idc.num)) {
                rec.event_id = std::to_string(static_cast<long long>(idc.num));
            } else if (idc.is_number) {
                std::ostringstream ss;
                ss << idc.num;
                rec.event_id = ss.str();
            } else {
                rec.event_id = idc.token;
            }
        }
        table.rows.push_back(std::move(rec));
        if (report) ++report->rows_kept;
    }
    return table;
}

RawTable parse_kelvins_csv_file(const std::string& path, const ParseOptions& opts,
                                ParseReport* report) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CsvError("csv: cannot open " + path);
    return parse_kelvins_csv(in, opts, report);
}

}  // namespace cdmlstm
