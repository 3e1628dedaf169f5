#include "eventnet/csv.hpp"

#include <istream>

#include "eventnet/errors.hpp"

namespace eventnet {

bool CsvReader::next_row(std::vector<std::string>& fields) {
  fields.clear();
  int first = in_.peek();
  if (first == std::char_traits<char>::eof()) return false;
  ++row_;

  std::string field;
  bool quoted = false;
  bool field_was_quoted = false;
  for (;;) {
    int ci = in_.get();
    if (ci == std::char_traits<char>::eof()) {
      if (quoted) throw ParseError("unterminated quoted field", row_);
      fields.push_back(std::move(field));
      return true;
    }
    char c = static_cast<char>(ci);
    if (quoted) {
      if (c == '"') {
        if (in_.peek() == '"') {
          in_.get();
          field.push_back('"');
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case ',':
        fields.push_back(std::move(field));
        field.clear();
        field_was_quoted = false;
        break;
      case '\r':
        if (in_.peek() == '\n') in_.get();
        [[fallthrough]];
      case '\n':
        fields.push_back(std::move(field));
        return true;
      case '"':
        if (!field.empty() || field_was_quoted) {
          throw ParseError("unexpected quote inside unquoted field", row_);
        }
        quoted = true;
        field_was_quoted = true;
        break;
      default:
        if (field_was_quoted) {
          throw ParseError("data after closing quote", row_);
        }
        field.push_back(c);
        break;
    }
  }
}

}  // namespace eventnet
