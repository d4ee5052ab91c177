#pragma once
// Minimal RFC 4180 CSV reading/writing (quoted fields, embedded commas,
// quotes and newlines).

#include <iosfwd>
#include <string>
#include <vector>

namespace ct {

using CsvRow = std::vector<std::string>;

// Parse a whole stream; empty trailing line is not a record.
std::vector<CsvRow> read_csv(std::istream& in);
std::vector<CsvRow> read_csv_file(const std::string& path);

std::string csv_quote(const std::string& field);
std::string format_csv_row(const CsvRow& row);

} // namespace ct
