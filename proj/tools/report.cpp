#include "ltest_cli/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace ltest::cli {

namespace {

nlohmann::json value_json(const Value& v) {
  return std::visit(
      [](const auto& x) -> nlohmann::json {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, std::monostate>) {
          return nullptr;
        } else {
          return x;
        }
      },
      v);
}

std::string value_text(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "none";
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return x;
        } else {
          return std::to_string(x);
        }
      },
      v);
}

nlohmann::json witness_json(const Witness& w) {
  nlohmann::json words = nlohmann::json::array();
  for (const auto& word : w.words) words.push_back(word_string(word));
  return {{"condition", w.condition},
          {"nodes", w.nodes},
          {"elements", w.elements},
          {"words", words},
          {"description", w.description}};
}

}  // namespace

std::string to_json(const AnalysisReport& r) {
  nlohmann::json input = {{"file", r.file}, {"kind", r.kind}};
  for (const auto& [k, v] : r.input) input[k] = value_json(v);
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json j = {{"name", c.name},
                        {"property", c.verdict.property},
                        {"holds", c.verdict.holds},
                        {"witness", c.verdict.witness ? witness_json(*c.verdict.witness) : nlohmann::json(nullptr)},
                        {"notes", c.verdict.notes},
                        {"seconds", c.seconds}};
    for (const auto& [k, v] : c.extra) j[k] = value_json(v);
    checks.push_back(std::move(j));
  }
  nlohmann::json out = {{"tool", "ltest"}, {"version", LTEST_VERSION}, {"input", input}, {"checks", checks}};
  out["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
  return out.dump(2) + "\n";
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << r.kind << ' ' << r.file;
  for (const auto& [k, v] : r.input) out << ' ' << k << '=' << value_text(v);
  out << '\n';
  if (r.seed) out << "seed " << *r.seed << '\n';
  for (const auto& c : r.checks) {
    out << c.name << ": " << (c.verdict.holds ? "true" : "false");
    for (const auto& [k, v] : c.extra) out << ' ' << k << '=' << value_text(v);
    out << std::fixed << std::setprecision(3) << " (" << c.seconds << " s)\n";
    if (c.verdict.witness) {
      const auto& w = *c.verdict.witness;
      out << "  witness: condition " << w.condition;
      if (!w.nodes.empty()) {
        out << "; nodes";
        for (auto p : w.nodes) out << ' ' << p;
      }
      if (!w.elements.empty()) {
        out << "; elements";
        for (auto x : w.elements) out << ' ' << x;
      }
      for (const auto& word : w.words) out << "; word " << word_string(word);
      if (!w.description.empty()) out << "; " << w.description;
      out << '\n';
    }
    if (!c.verdict.notes.empty()) out << "  notes: " << c.verdict.notes << '\n';
  }
  return out.str();
}

}  // namespace ltest::cli
