#pragma once

// Internal line-oriented CSV reader: comma-separated, no quoting, strict
// column counts, 1-based line numbers for error reporting.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace tsc::detail {

struct CsvRow {
    std::size_t line = 0;
    std::vector<std::string> fields;
};

/// Checks the header matches `expected` exactly, then yields data rows with
/// the same field count. Blank lines are skipped. Throws ParseError.
std::vector<CsvRow> read_csv(std::istream& in, const std::vector<std::string>& expected_header);

double parse_double(const CsvRow& row, std::size_t field);
long long parse_int(const CsvRow& row, std::size_t field);
bool parse_bool01(const CsvRow& row, std::size_t field);

}  // namespace tsc::detail
