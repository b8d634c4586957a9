#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ltest {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. Line and column are 1-based; column 0 means the
// whole line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Structurally invalid object: non-associative table, closure escaping the
// declared element list, incomplete graph where a complete one is required.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A configured size cap would be exceeded. `partial` carries whatever count
// had been reached when the computation stopped.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t partial, std::size_t cap);

  std::size_t partial() const noexcept { return partial_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t partial_;
  std::size_t cap_;
};

// Two routes that must agree did not. Signals a bug, never bad input.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace ltest
