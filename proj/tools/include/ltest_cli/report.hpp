#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ltest/verdict.hpp"

namespace ltest::cli {

// Extra scalar facts attached to a check or an input (order, sizes, ...).
// std::monostate serializes as null.
using Value = std::variant<std::monostate, bool, std::int64_t, std::string>;

struct CheckRecord {
  std::string name;
  Verdict verdict;
  double seconds = 0;
  std::map<std::string, Value> extra;
};

struct AnalysisReport {
  std::string file;
  std::string kind;  // graph, semigroup, acceptor, magma, corpus
  std::map<std::string, Value> input;
  std::vector<CheckRecord> checks;
  std::optional<std::uint64_t> seed;
};

std::string to_json(const AnalysisReport& r);
std::string to_text(const AnalysisReport& r);

}  // namespace ltest::cli
