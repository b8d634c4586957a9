#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ltest/graph.hpp"
#include "ltest/limits.hpp"
#include "ltest/oracle.hpp"
#include "ltest/verdict.hpp"

namespace ltest {

// All checks except piecewise require a complete graph and throw
// InvalidInput otherwise. The graph is taken to be the transition graph of a
// reduced automaton; reducedness is not verified.

// For every C-node (p, q) of the square with p >= q:
//   1. q >= p implies p = q;
//   2. every (p', q') reached from (p, q) has p' >= q iff q' >= q.
// The second condition is decided once per q by a backward search from the
// pairs that break it, so the whole check is O(n^3 g).
Verdict check_local_testability_graph(const TransitionGraph& g, const Limits& limits = {});

// For every C-node (p, q) of the square:
//   1. p ~ q implies p = q;
//   2. every (p', q') reached from (p, q) with p' >= q has q' >= q.
Verdict check_right_lt_graph(const TransitionGraph& g, const Limits& limits = {});

// Locally idempotent, condition 2 of local testability, and for every C-node
// (p, q, r) of the cube with (p, r) >= (q, r) and (p, q) >= (r, q): r = q.
Verdict check_left_lt_graph(const TransitionGraph& g, const Limits& limits = {});

// Through the transition semigroup.
Verdict check_local_idempotency_graph(const TransitionGraph& g, const Limits& limits = {});

// T(p, q, r1) = {t : (p, r1) >= (q, t), q >= t, (q, t) a C-node}; well defined
// when nonempty and inside one strongly connected component of the graph.
struct T3Context {
  Node p;
  Node q;
  Node r1;
  std::vector<Node> t;                  // sorted
  std::optional<std::uint32_t> scc;     // component id when well defined

  bool well_defined() const noexcept { return scc.has_value(); }
};

// Throws InvalidInput("inadmissible triple ...") unless (p, r1) is a C-node,
// p >= q and some r has (q, r) a C-node with p >= r >= r1.
T3Context t3(const TransitionGraph& g, Node p, Node q, Node r1, const Limits& limits = {});

// Aperiodicity-free graph form of threshold local testability:
//   1. p ~ q implies p = q for C-nodes (p, q);
//   2. (p, r1) C-node, (p, r1) >= (q, t) and some r with p >= r >= r1 and
//      (r, t) a C-node imply q >= t;
//   3. every admissible T3 is well defined;
//   4. T3(p, q, r1) = T3(p, r, q1) whenever (p, q1), (q, r) are C-nodes,
//      p >= q, p >= r, (q, r) >= (q1, r1) and (p, r1) is a C-node. A side that
//      is not well defined only matches another such side.
Verdict check_threshold_lt_graph(const TransitionGraph& g, const Limits& limits = {});

// Acyclic (loops allowed) and, for every p, the weakly connected component of
// p in the graph restricted to the stabilizer of p has exactly one node
// without a restricted edge to a different node. Partial graphs are accepted.
Verdict check_piecewise_graph(const TransitionGraph& g);

// Exact k-testability of the accepted language (nonempty words). For each
// (k-1)-word f, the maps induced by words c with fc ending in f are required
// to act on init.(A* f) as a commuting family of idempotents. A failure comes
// with two words of equal k-signature on opposite sides of the language.
Verdict check_k_testability_graph(const AcceptorDfa& a, std::size_t k, const Limits& limits = {});

struct OrderBounds {
  Verdict lt;
  std::optional<std::size_t> order;  // least k <= cap, when lt holds and one was found
  std::size_t cap = 0;
  bool above_cap = false;            // lt holds and no k <= cap works
};

inline constexpr std::size_t kDefaultOrderCap = 4;

OrderBounds order_bounds_graph(const AcceptorDfa& a, std::size_t cap = kDefaultOrderCap,
                               const Limits& limits = {});

}  // namespace ltest
