#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fos {

/// RFC-4180 style quoting: fields containing comma, quote, or newline are
/// wrapped in double quotes with inner quotes doubled.
std::string csv_escape(const std::string& field);

/// Splits one CSV line honoring quotes. Throws ParseError on unterminated
/// quoting.
std::vector<std::string> csv_split(const std::string& line);

/// Reads a whole CSV document into rows of fields. Skips blank lines.
std::vector<std::vector<std::string>> read_csv(std::istream& in);

}  // namespace fos
