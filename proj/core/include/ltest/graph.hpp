#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ltest {

using Node = std::uint32_t;
using Letter = std::uint32_t;

inline constexpr Node kUndefined = std::numeric_limits<Node>::max();

// A deterministic labeled graph stored as a dense nodes x letters table.
// Missing edges are kUndefined.
class TransitionGraph {
 public:
  TransitionGraph() = default;
  TransitionGraph(std::size_t node_count, std::size_t letter_count);

  std::size_t node_count() const noexcept { return nodes_; }
  std::size_t letter_count() const noexcept { return letters_; }

  Node target(Node p, Letter a) const noexcept { return delta_[p * letters_ + a]; }
  bool defined(Node p, Letter a) const noexcept { return target(p, a) != kUndefined; }
  void set(Node p, Letter a, Node q);

  std::span<const Node> row(Node p) const noexcept {
    return {delta_.data() + p * letters_, letters_};
  }

  bool is_complete() const noexcept;
  std::size_t edge_count() const noexcept;

  // Applies a word letter by letter; kUndefined as soon as an edge is missing.
  Node run(Node p, std::span<const Letter> word) const noexcept;

  bool operator==(const TransitionGraph&) const = default;

 private:
  std::size_t nodes_ = 0;
  std::size_t letters_ = 0;
  std::vector<Node> delta_;
};

// Display name of letter `a`: 'a', 'b', ... then a<index> past 'z'.
std::string letter_name(Letter a);
std::string word_string(std::span<const Letter> word);

// Contents of a graph file. `initial` and `finals` are only present when the
// optional trailing lines were given.
struct GraphFile {
  TransitionGraph graph;
  std::optional<Node> initial;
  std::optional<std::vector<Node>> finals;
};

GraphFile parse_graph_file(std::string_view text);
TransitionGraph parse_graph(std::string_view text);
std::string serialize_graph(const TransitionGraph& g,
                            std::optional<Node> initial = std::nullopt,
                            std::span<const Node> finals = {},
                            bool write_finals = false);

// Adds a single absorbing sink when (and only when) some entry is undefined.
TransitionGraph complete_with_sink(const TransitionGraph& g);

// Letters whose edge at q is a loop or missing. A missing edge is not a
// non-loop edge, so it belongs to the stabilizer.
std::vector<Letter> stabilizer(const TransitionGraph& g, Node q);

// Same nodes, only edges whose label is in `letters`. Alphabet size is kept.
TransitionGraph restrict_letters(const TransitionGraph& g, std::span<const Letter> letters);

// Componentwise product over the common prefix of both alphabets. Pair (p, q)
// is node p * n2 + q.
TransitionGraph product_graphs(const TransitionGraph& g1, const TransitionGraph& g2);

}  // namespace ltest
