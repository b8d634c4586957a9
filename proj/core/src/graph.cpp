#include "ltest/graph.hpp"

#include <algorithm>
#include <sstream>

#include "ltest/error.hpp"
#include "ltest/text.hpp"

namespace ltest {

TransitionGraph::TransitionGraph(std::size_t node_count, std::size_t letter_count)
    : nodes_(node_count), letters_(letter_count), delta_(node_count * letter_count, kUndefined) {}

void TransitionGraph::set(Node p, Letter a, Node q) {
  if (p >= nodes_ || a >= letters_ || (q != kUndefined && q >= nodes_)) {
    throw InvalidInput("edge (" + std::to_string(p) + ", " + std::to_string(a) + ") -> " +
                       std::to_string(q) + " out of range");
  }
  delta_[p * letters_ + a] = q;
}

bool TransitionGraph::is_complete() const noexcept {
  return std::find(delta_.begin(), delta_.end(), kUndefined) == delta_.end();
}

std::size_t TransitionGraph::edge_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(delta_.begin(), delta_.end(), [](Node q) { return q != kUndefined; }));
}

Node TransitionGraph::run(Node p, std::span<const Letter> word) const noexcept {
  for (Letter a : word) {
    if (p == kUndefined) break;
    p = target(p, a);
  }
  return p;
}

std::string letter_name(Letter a) {
  if (a < 26) return std::string(1, static_cast<char>('a' + a));
  return "a" + std::to_string(a);
}

std::string word_string(std::span<const Letter> word) {
  std::string out;
  for (Letter a : word) out += letter_name(a);
  return out;
}

GraphFile parse_graph_file(std::string_view text) {
  auto lines = text::tokenize(text);
  if (lines.empty()) throw ParseError(1, 0, "empty graph file");

  const auto& header = lines.front();
  if (header.fields.size() != 3 || header.fields[0].value != "graph") {
    throw ParseError(header.number, 1, "expected header 'graph <node_count> <letter_count>'");
  }
  const std::size_t n = text::to_index(header, header.fields[1]);
  const std::size_t g = text::to_index(header, header.fields[2]);
  if (n == 0) throw ParseError(header.number, header.fields[1].column, "node count must be positive");
  if (g == 0) throw ParseError(header.number, header.fields[2].column, "letter count must be positive");
  if (lines.size() < n + 1) {
    throw ParseError(lines.back().number, 0,
                     "expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size() - 1));
  }

  GraphFile out{TransitionGraph(n, g), std::nullopt, std::nullopt};
  for (std::size_t p = 0; p < n; ++p) {
    const auto& line = lines[p + 1];
    if (line.fields.size() != g) {
      throw ParseError(line.number, 0,
                       "row has " + std::to_string(line.fields.size()) + " fields, expected " +
                           std::to_string(g));
    }
    for (std::size_t a = 0; a < g; ++a) {
      const auto& f = line.fields[a];
      if (f.value == "-") continue;
      std::size_t q = text::to_index(line, f);
      if (q >= n) {
        throw ParseError(line.number, f.column,
                         "target " + std::to_string(q) + " out of range for " + std::to_string(n) + " nodes");
      }
      out.graph.set(static_cast<Node>(p), static_cast<Letter>(a), static_cast<Node>(q));
    }
  }

  for (std::size_t i = n + 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto key = line.fields[0].value;
    auto node_at = [&](const text::Field& f) {
      std::size_t q = text::to_index(line, f);
      if (q >= n) throw ParseError(line.number, f.column, "state " + std::to_string(q) + " out of range");
      return static_cast<Node>(q);
    };
    if (key == "initial") {
      if (line.fields.size() != 2) throw ParseError(line.number, 0, "expected 'initial <state>'");
      if (out.initial) throw ParseError(line.number, 1, "duplicate 'initial' line");
      out.initial = node_at(line.fields[1]);
    } else if (key == "final") {
      if (out.finals) throw ParseError(line.number, 1, "duplicate 'final' line");
      std::vector<Node> finals;
      for (std::size_t j = 1; j < line.fields.size(); ++j) finals.push_back(node_at(line.fields[j]));
      std::sort(finals.begin(), finals.end());
      finals.erase(std::unique(finals.begin(), finals.end()), finals.end());
      out.finals = std::move(finals);
    } else {
      throw ParseError(line.number, 1,
                       "unexpected line (only " + std::to_string(n) + " rows declared)");
    }
  }
  return out;
}

TransitionGraph parse_graph(std::string_view text) { return parse_graph_file(text).graph; }

std::string serialize_graph(const TransitionGraph& g, std::optional<Node> initial,
                            std::span<const Node> finals, bool write_finals) {
  std::ostringstream out;
  out << "graph " << g.node_count() << ' ' << g.letter_count() << '\n';
  for (Node p = 0; p < g.node_count(); ++p) {
    for (Letter a = 0; a < g.letter_count(); ++a) {
      if (a != 0) out << ' ';
      Node q = g.target(p, a);
      if (q == kUndefined) {
        out << '-';
      } else {
        out << q;
      }
    }
    out << '\n';
  }
  if (initial) out << "initial " << *initial << '\n';
  if (write_finals || !finals.empty()) {
    out << "final";
    for (Node q : finals) out << ' ' << q;
    out << '\n';
  }
  return out.str();
}

TransitionGraph complete_with_sink(const TransitionGraph& g) {
  if (g.is_complete()) return g;
  const std::size_t n = g.node_count();
  const Node sink = static_cast<Node>(n);
  TransitionGraph out(n + 1, g.letter_count());
  for (Node p = 0; p <= n; ++p) {
    for (Letter a = 0; a < g.letter_count(); ++a) {
      Node q = p < n ? g.target(p, a) : kUndefined;
      out.set(p, a, q == kUndefined ? sink : q);
    }
  }
  return out;
}

std::vector<Letter> stabilizer(const TransitionGraph& g, Node q) {
  std::vector<Letter> out;
  for (Letter a = 0; a < g.letter_count(); ++a) {
    Node t = g.target(q, a);
    if (t == q || t == kUndefined) out.push_back(a);
  }
  return out;
}

TransitionGraph restrict_letters(const TransitionGraph& g, std::span<const Letter> letters) {
  TransitionGraph out(g.node_count(), g.letter_count());
  for (Letter a : letters) {
    if (a >= g.letter_count()) throw InvalidInput("letter " + std::to_string(a) + " not in alphabet");
    for (Node p = 0; p < g.node_count(); ++p) out.set(p, a, g.target(p, a));
  }
  return out;
}

TransitionGraph product_graphs(const TransitionGraph& g1, const TransitionGraph& g2) {
  const std::size_t n2 = g2.node_count();
  const std::size_t letters = std::min(g1.letter_count(), g2.letter_count());
  TransitionGraph out(g1.node_count() * n2, letters);
  for (Node p = 0; p < g1.node_count(); ++p) {
    for (Node q = 0; q < n2; ++q) {
      for (Letter a = 0; a < letters; ++a) {
        Node p2 = g1.target(p, a);
        Node q2 = g2.target(q, a);
        if (p2 == kUndefined || q2 == kUndefined) continue;
        out.set(static_cast<Node>(p * n2 + q), a, static_cast<Node>(p2 * n2 + q2));
      }
    }
  }
  return out;
}

}  // namespace ltest
