#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "ltest/graph.hpp"
#include "ltest/limits.hpp"

namespace ltest {

using NodeTuple = std::vector<Node>;
using TupleId = std::size_t;

inline constexpr TupleId kNoTuple = std::numeric_limits<TupleId>::max();

// Indexing of the m-th direct power of a graph. Tuple (p1, ..., pm) has id
// p1 * n^(m-1) + ... + pm. Letters act componentwise.
class TupleSpace {
 public:
  TupleSpace(const TransitionGraph& g, unsigned order, const Limits& limits = {});

  const TransitionGraph& graph() const noexcept { return graph_; }
  unsigned order() const noexcept { return order_; }
  std::size_t size() const noexcept { return size_; }

  TupleId encode(std::span<const Node> tuple) const;
  NodeTuple decode(TupleId t) const;
  Node component(TupleId t, unsigned i) const noexcept;

  // kNoTuple when some component has no edge for `a`.
  TupleId successor(TupleId t, Letter a) const noexcept;

 private:
  TransitionGraph graph_;
  unsigned order_;
  std::size_t size_;
  std::vector<std::size_t> weight_;
};

// Strongly connected components of a tuple space. Ids follow Tarjan's
// emission order, so every edge goes from a component id to one that is
// less than or equal to it.
struct SccDecomposition {
  std::vector<std::uint32_t> component;  // per tuple
  std::vector<std::uint32_t> size;       // per component
  std::vector<bool> cyclic;              // per component: size > 1 or carries a loop

  std::size_t count() const noexcept { return size.size(); }
  bool trivial(std::uint32_t c) const noexcept { return size[c] == 1; }
};

SccDecomposition scc(const TupleSpace& space);
SccDecomposition scc(const TransitionGraph& g, unsigned order, const Limits& limits = {});

// Reachability between tuples of a direct power. `reach` is the relation
// "reachable by a nonempty word"; `reach_or_equal` adds the diagonal.
class ReachabilityRelation {
 public:
  ReachabilityRelation(const TransitionGraph& g, unsigned order, const Limits& limits = {});

  const TupleSpace& space() const noexcept { return space_; }
  const SccDecomposition& components() const noexcept { return scc_; }
  unsigned order() const noexcept { return space_.order(); }

  bool reach(TupleId from, TupleId to) const noexcept;
  bool reach_or_equal(TupleId from, TupleId to) const noexcept { return from == to || reach(from, to); }
  bool mutually_reachable(TupleId a, TupleId b) const noexcept {
    return scc_.component[a] == scc_.component[b];
  }
  // Lies on a cycle of the power graph (nonempty-word self reachability).
  bool is_c_node(TupleId t) const noexcept { return scc_.cyclic[scc_.component[t]]; }

  bool reach(std::span<const Node> from, std::span<const Node> to) const {
    return reach(space_.encode(from), space_.encode(to));
  }
  bool reach_or_equal(std::span<const Node> from, std::span<const Node> to) const {
    return reach_or_equal(space_.encode(from), space_.encode(to));
  }

 private:
  TupleSpace space_;
  SccDecomposition scc_;
  std::vector<boost::dynamic_bitset<>> below_;  // strict descendants per component
};

ReachabilityRelation reachability(const TransitionGraph& g, unsigned order, const Limits& limits = {});

// Tuples of the m-th power lying on a cycle.
std::vector<NodeTuple> c_nodes(const TransitionGraph& g, unsigned order, const Limits& limits = {});

// Every SCC of the graph is a single node (loops allowed). Missing edges are
// ignored, so partial graphs are accepted.
bool is_acyclic(const TransitionGraph& g);

// Reflexive reachability on nodes as one bitset row per node.
std::vector<boost::dynamic_bitset<>> node_reach_or_equal(const TransitionGraph& g);

}  // namespace ltest
