#include "ltest/error.hpp"

namespace ltest {

namespace {
std::string located(std::size_t line, std::size_t column, const std::string& what) {
  std::string out = "line " + std::to_string(line);
  if (column != 0) out += ", column " + std::to_string(column);
  return out + ": " + what;
}
}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : Error(located(line, column, what)), line_(line), column_(column) {}

CapExceeded::CapExceeded(const std::string& what, std::size_t partial, std::size_t cap)
    : Error(what + " (reached " + std::to_string(partial) + ", cap " + std::to_string(cap) + ")"),
      partial_(partial),
      cap_(cap) {}

}  // namespace ltest
