#include "ltest/text.hpp"

#include <cctype>
#include <charconv>

#include "ltest/error.hpp"

namespace ltest::text {

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i >= raw.size()) break;
      if (line.fields.empty() && raw[i] == '#') break;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      line.fields.push_back({raw.substr(i, j - i), i + 1});
      i = j;
    }
    if (!line.fields.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::size_t to_index(const Line& line, const Field& f) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(f.value.data(), f.value.data() + f.value.size(), value);
  if (ec != std::errc{} || ptr != f.value.data() + f.value.size()) {
    throw ParseError(line.number, f.column,
                     "expected a non-negative integer, got '" + std::string(f.value) + "'");
  }
  return value;
}

}  // namespace ltest::text
