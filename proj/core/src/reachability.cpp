#include "ltest/reachability.hpp"

#include <algorithm>

#include "ltest/detail/tarjan.hpp"
#include "ltest/error.hpp"

namespace ltest {

TupleSpace::TupleSpace(const TransitionGraph& g, unsigned order, const Limits& limits)
    : graph_(g), order_(order), size_(1), weight_(order, 1) {
  if (order == 0) throw InvalidInput("tuple order must be at least 1");
  const std::size_t n = g.node_count();
  for (unsigned i = 0; i < order; ++i) {
    if (n != 0 && size_ > limits.tuple_cap / n) {
      throw CapExceeded("power graph of order " + std::to_string(order) + " too large", size_, limits.tuple_cap);
    }
    size_ *= n;
  }
  if (size_ > limits.tuple_cap) {
    throw CapExceeded("power graph of order " + std::to_string(order) + " too large", size_, limits.tuple_cap);
  }
  for (unsigned i = order; i-- > 1;) weight_[i - 1] = weight_[i] * n;
}

TupleId TupleSpace::encode(std::span<const Node> tuple) const {
  if (tuple.size() != order_) throw InvalidInput("tuple has wrong length");
  TupleId t = 0;
  for (unsigned i = 0; i < order_; ++i) {
    if (tuple[i] >= graph_.node_count()) throw InvalidInput("tuple component out of range");
    t += tuple[i] * weight_[i];
  }
  return t;
}

NodeTuple TupleSpace::decode(TupleId t) const {
  NodeTuple out(order_);
  for (unsigned i = 0; i < order_; ++i) out[i] = component(t, i);
  return out;
}

Node TupleSpace::component(TupleId t, unsigned i) const noexcept {
  return static_cast<Node>((t / weight_[i]) % graph_.node_count());
}

TupleId TupleSpace::successor(TupleId t, Letter a) const noexcept {
  TupleId out = 0;
  for (unsigned i = 0; i < order_; ++i) {
    Node q = graph_.target(component(t, i), a);
    if (q == kUndefined) return kNoTuple;
    out += q * weight_[i];
  }
  return out;
}

SccDecomposition scc(const TupleSpace& space) {
  auto c = detail::tarjan(space.size(), space.graph().letter_count(), kNoTuple,
                          [&](std::size_t t, std::size_t a) { return space.successor(t, static_cast<Letter>(a)); });
  return SccDecomposition{std::move(c.component), std::move(c.size), std::move(c.cyclic)};
}

SccDecomposition scc(const TransitionGraph& g, unsigned order, const Limits& limits) {
  return scc(TupleSpace(g, order, limits));
}

ReachabilityRelation::ReachabilityRelation(const TransitionGraph& g, unsigned order, const Limits& limits)
    : space_(g, order, limits), scc_(scc(space_)) {
  const std::size_t c = scc_.count();
  if (c != 0 && c > limits.closure_bit_cap / c) {
    throw CapExceeded("reachability closure too large", c * c, limits.closure_bit_cap);
  }
  // Successor components per component.
  std::vector<std::vector<std::uint32_t>> succ(c);
  for (TupleId t = 0; t < space_.size(); ++t) {
    const auto from = scc_.component[t];
    for (Letter a = 0; a < g.letter_count(); ++a) {
      TupleId u = space_.successor(t, a);
      if (u == kNoTuple) continue;
      const auto to = scc_.component[u];
      if (to != from) succ[from].push_back(to);
    }
  }
  below_.assign(c, boost::dynamic_bitset<>(c));
  // Successors always carry smaller ids, so increasing order is topological
  // from the sinks up.
  for (std::uint32_t id = 0; id < c; ++id) {
    auto& row = below_[id];
    auto& s = succ[id];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (auto d : s) {
      row.set(d);
      row |= below_[d];
    }
  }
}

bool ReachabilityRelation::reach(TupleId from, TupleId to) const noexcept {
  const auto c = scc_.component[from];
  const auto d = scc_.component[to];
  if (c == d) return from != to || scc_.cyclic[c];
  return below_[c].test(d);
}

ReachabilityRelation reachability(const TransitionGraph& g, unsigned order, const Limits& limits) {
  return ReachabilityRelation(g, order, limits);
}

std::vector<NodeTuple> c_nodes(const TransitionGraph& g, unsigned order, const Limits& limits) {
  TupleSpace space(g, order, limits);
  auto comps = scc(space);
  std::vector<NodeTuple> out;
  for (TupleId t = 0; t < space.size(); ++t) {
    if (comps.cyclic[comps.component[t]]) out.push_back(space.decode(t));
  }
  return out;
}

bool is_acyclic(const TransitionGraph& g) {
  auto comps = scc(g, 1);
  return std::all_of(comps.size.begin(), comps.size.end(), [](std::uint32_t s) { return s == 1; });
}

std::vector<boost::dynamic_bitset<>> node_reach_or_equal(const TransitionGraph& g) {
  ReachabilityRelation rel(g, 1);
  const std::size_t n = g.node_count();
  std::vector<boost::dynamic_bitset<>> out(n, boost::dynamic_bitset<>(n));
  for (Node p = 0; p < n; ++p) {
    for (Node q = 0; q < n; ++q) {
      if (rel.reach_or_equal(p, q)) out[p].set(q);
    }
  }
  return out;
}

}  // namespace ltest
