#pragma once

// Line/field tokenizer shared by the graph and semigroup readers.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ltest::text {

struct Field {
  std::string_view value;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Field> fields;
};

// Splits on whitespace, dropping blank lines and lines whose first
// non-blank character is '#'.
std::vector<Line> tokenize(std::string_view text);

// Parses a non-negative decimal integer or throws ParseError at `f`.
std::size_t to_index(const Line& line, const Field& f);

}  // namespace ltest::text
