#include "rubric/csv.hpp"

#include "rubric/error.hpp"

namespace rubric::csv {

std::string escape_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos)
    return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string format_row(const Row& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ',';
    out += escape_field(row[i]);
  }
  out += "\r\n";
  return out;
}

std::vector<Row> parse(std::string_view document) {
  std::vector<Row> rows;
  Row row;
  std::string field;
  bool quoted = false;      // inside a quoted field
  bool was_quoted = false;  // current field started with a quote
  bool row_has_content = false;
  std::size_t line = 1;

  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    was_quoted = false;
  };
  auto end_row = [&] {
    end_field();
    if (row_has_content || row.size() > 1) rows.push_back(std::move(row));
    row.clear();
    row_has_content = false;
  };

  for (std::size_t i = 0; i < document.size(); ++i) {
    const char c = document[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < document.size() && document[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty() || was_quoted) {
          throw Error(ErrorCode::ParseError,
                      "stray quote in CSV at line " + std::to_string(line));
        }
        quoted = true;
        was_quoted = true;
        row_has_content = true;
        break;
      case ',':
        row_has_content = true;
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        end_row();
        ++line;
        break;
      default:
        if (was_quoted) {
          throw Error(ErrorCode::ParseError,
                      "text after closing quote at line " + std::to_string(line));
        }
        field += c;
        row_has_content = true;
    }
  }
  if (quoted) {
    throw Error(ErrorCode::ParseError, "unterminated quoted field in CSV");
  }
  if (row_has_content || !field.empty() || !row.empty()) end_row();
  return rows;
}

}  // namespace rubric::csv
