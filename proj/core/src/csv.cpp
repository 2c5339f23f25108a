#include "csv.hpp"

#include <cerrno>
#include <cstdlib>
#include <istream>

#include "tscluster/errors.hpp"

namespace tsc::detail {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

std::vector<CsvRow> read_csv(std::istream& in, const std::vector<std::string>& expected_header) {
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) throw ParseError(1, "missing header row");
    ++line_no;
    const auto header = split_fields(strip_cr(line));
    if (header != expected_header) {
        std::string want;
        for (std::size_t i = 0; i < expected_header.size(); ++i)
            want += (i ? "," : "") + expected_header[i];
        throw ParseError(1, "unexpected header, want '" + want + "'");
    }

    std::vector<CsvRow> rows;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        CsvRow row{line_no, split_fields(line)};
        if (row.fields.size() != expected_header.size())
            throw ParseError(line_no, "expected " + std::to_string(expected_header.size()) +
                                          " fields, got " + std::to_string(row.fields.size()));
        rows.push_back(std::move(row));
    }
    return rows;
}

double parse_double(const CsvRow& row, std::size_t field) {
    const std::string& text = row.fields[field];
    if (text.empty()) throw ParseError(row.line, "empty numeric field");
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (errno != 0 || end != text.c_str() + text.size())
        throw ParseError(row.line, "bad number '" + text + "'");
    return v;
}

long long parse_int(const CsvRow& row, std::size_t field) {
    const std::string& text = row.fields[field];
    if (text.empty()) throw ParseError(row.line, "empty integer field");
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(text.c_str(), &end, 10);
    if (errno != 0 || end != text.c_str() + text.size())
        throw ParseError(row.line, "bad integer '" + text + "'");
    return v;
}

bool parse_bool01(const CsvRow& row, std::size_t field) {
    const std::string& text = row.fields[field];
    if (text == "0") return false;
    if (text == "1") return true;
    throw ParseError(row.line, "expected boolean 0/1, got '" + text + "'");
}

}  // namespace tsc::detail
