#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ltest/graph.hpp"
#include "ltest/semigroup.hpp"

namespace ltest {

// Why a check failed. Which fields are filled depends on the check: graph
// checks fill `nodes`, semigroup checks fill `elements`, oracle checks fill
// `words` with two words of equal signature and different membership.
struct Witness {
  std::string condition;  // which condition of the criterion is violated
  std::vector<Node> nodes;
  std::vector<Element> elements;
  std::vector<std::vector<Letter>> words;
  std::string description;
};

struct Verdict {
  std::string property;
  bool holds = true;
  std::optional<Witness> witness;  // present iff !holds
  std::string notes;

  explicit operator bool() const noexcept { return holds; }

  static Verdict pass(std::string property, std::string notes = {});
  static Verdict fail(std::string property, Witness witness, std::string notes = {});
};

std::string to_string(const Verdict& v);

}  // namespace ltest
