// csv.hpp
// Small CSV helpers for the fixed, comma-only file formats used by this
// project. Fields never contain embedded commas or quotes.

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace signet::csv {

// Splits a line on commas; does not trim whitespace inside fields but
// drops a trailing '\r' left behind by CRLF files.
std::vector<std::string_view> split(std::string_view line);

// Shortest decimal string that round-trips the exact double value.
std::string format_double(double v);

// Parses a full-field double; throws ParseError on trailing junk or empty.
double parse_double(std::string_view field, std::size_t row);

}  // namespace signet::csv
