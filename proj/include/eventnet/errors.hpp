#pragma once

#include <stdexcept>
#include <string>

namespace eventnet {

// Malformed input data (bad CSV structure, bad JSON shape). Carries a
// 1-based row number when one is known.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg, std::size_t row = 0)
      : std::runtime_error(row ? "row " + std::to_string(row) + ": " + msg : msg), row_(row) {}
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

// Bad configuration: missing mapped column, malformed window/era flags.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid input that violates a data contract (duplicate ids).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// A metric that has no defined value on the given graph (edgeless
// modularity, path length with no reachable pair).
class UndefinedMetricError : public std::runtime_error {
 public:
  explicit UndefinedMetricError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace eventnet
