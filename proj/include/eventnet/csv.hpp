#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace eventnet {

// Streaming CSV reader: comma separated, double-quote quoting with ""
// escapes, quoted fields may span lines, CRLF tolerated. Throws ParseError
// (with the 1-based row number) on structural problems.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  // Reads the next row into `fields`. Returns false at end of input.
  bool next_row(std::vector<std::string>& fields);

  // 1-based number of the last row returned (header row is row 1).
  std::size_t row_number() const { return row_; }

 private:
  std::istream& in_;
  std::size_t row_ = 0;
};

}  // namespace eventnet
