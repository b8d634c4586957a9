#include "ltest/verdict.hpp"

#include <sstream>

namespace ltest {

Verdict Verdict::pass(std::string property, std::string notes) {
  return Verdict{std::move(property), true, std::nullopt, std::move(notes)};
}

Verdict Verdict::fail(std::string property, Witness witness, std::string notes) {
  return Verdict{std::move(property), false, std::move(witness), std::move(notes)};
}

std::string to_string(const Verdict& v) {
  std::ostringstream out;
  out << v.property << ": " << (v.holds ? "true" : "false");
  if (v.witness) {
    const auto& w = *v.witness;
    out << " [condition " << w.condition;
    if (!w.nodes.empty()) {
      out << "; nodes";
      for (Node p : w.nodes) out << ' ' << p;
    }
    if (!w.elements.empty()) {
      out << "; elements";
      for (Element x : w.elements) out << ' ' << x;
    }
    for (const auto& word : w.words) out << "; word " << word_string(word);
    if (!w.description.empty()) out << "; " << w.description;
    out << ']';
  }
  if (!v.notes.empty()) out << " (" << v.notes << ')';
  return out.str();
}

}  // namespace ltest
