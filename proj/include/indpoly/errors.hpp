#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace indpoly {

/// Bad user input: malformed files, invalid posets, out-of-range vertices.
/// Carries the 1-based line number when the input came from a text file.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// An internal cross-check failed (inexact division, route mismatch,
/// pivot legality). Always indicates a bug, never bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace indpoly
