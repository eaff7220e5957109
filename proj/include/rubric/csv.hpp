#pragma once

#include <string>
#include <string_view>
#include <vector>

// Minimal RFC 4180 reader/writer: comma separated, CRLF or LF line ends,
// double-quote escaping.
namespace rubric::csv {

using Row = std::vector<std::string>;

/// Quotes the field when it contains a comma, quote, CR or LF.
std::string escape_field(std::string_view field);
std::string format_row(const Row& row);  // terminated with "\r\n"

/// Throws Error{ParseError} on an unterminated quoted field or stray quote.
/// Blank lines are skipped.
std::vector<Row> parse(std::string_view document);

}  // namespace rubric::csv
