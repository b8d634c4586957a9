#include "ltest/graph_checks.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include <boost/functional/hash.hpp>

#include "ltest/bridge.hpp"
#include "ltest/error.hpp"
#include "ltest/reachability.hpp"
#include "ltest/semigroup_checks.hpp"

namespace ltest {

namespace {

void require_complete(const TransitionGraph& g, const char* check) {
  if (!g.is_complete()) {
    throw InvalidInput(std::string(check) + " needs a complete graph (apply sink completion first)");
  }
}

// Reflexive reachability on nodes plus the square with its components.
struct Square {
  const TransitionGraph& g;
  std::size_t n;
  std::vector<boost::dynamic_bitset<>> ge;  // ge[p][q]: p >= q
  std::vector<std::uint32_t> comp1;
  TupleSpace space;
  SccDecomposition comps;

  Square(const TransitionGraph& graph, const Limits& limits)
      : g(graph),
        n(graph.node_count()),
        ge(node_reach_or_equal(graph)),
        comp1(scc(graph, 1, limits).component),
        space(graph, 2, limits),
        comps(scc(space)) {}

  TupleId pair(Node p, Node q) const noexcept { return static_cast<TupleId>(p) * n + q; }
  bool c_node(Node p, Node q) const noexcept { return comps.cyclic[comps.component[pair(p, q)]]; }
  bool similar(Node p, Node q) const noexcept { return comp1[p] == comp1[q]; }
};

// Predecessor lists of the square in compressed form.
struct Predecessors {
  std::vector<std::size_t> offset;
  std::vector<TupleId> from;

  explicit Predecessors(const Square& sq) {
    const std::size_t size = sq.space.size();
    const std::size_t g = sq.g.letter_count();
    offset.assign(size + 1, 0);
    for (TupleId t = 0; t < size; ++t) {
      for (Letter a = 0; a < g; ++a) ++offset[sq.space.successor(t, a) + 1];
    }
    for (std::size_t i = 0; i < size; ++i) offset[i + 1] += offset[i];
    from.resize(offset[size]);
    std::vector<std::size_t> fill(offset.begin(), offset.end() - 1);
    for (TupleId t = 0; t < size; ++t) {
      for (Letter a = 0; a < g; ++a) from[fill[sq.space.successor(t, a)]++] = t;
    }
  }
};

// Condition shared by the square criteria: C-nodes (p, q) with p ~ q are
// diagonal.
std::optional<Witness> similar_c_node(const Square& sq) {
  for (Node p = 0; p < sq.n; ++p) {
    for (Node q = 0; q < sq.n; ++q) {
      if (p != q && sq.similar(p, q) && sq.c_node(p, q)) {
        return Witness{"1", {p, q}, {}, {}, "C-node (p, q) with p ~ q and p != q"};
      }
    }
  }
  return std::nullopt;
}

// For each q, marks every pair that reaches a pair (x, y) with bad(x, y, q),
// then looks for a marked C-node (p, q) selected by `candidate`. The witness
// is (p, q, x, y).
template <class Bad, class Candidate>
std::optional<Witness> reaches_bad_pair(const Square& sq, const Predecessors& pred, Bad bad, Candidate candidate,
                                        const char* condition, const char* description) {
  const std::size_t size = sq.space.size();
  std::vector<TupleId> origin(size);
  std::vector<TupleId> queue;
  queue.reserve(size);
  for (Node q = 0; q < sq.n; ++q) {
    std::fill(origin.begin(), origin.end(), kNoTuple);
    queue.clear();
    for (Node x = 0; x < sq.n; ++x) {
      for (Node y = 0; y < sq.n; ++y) {
        if (bad(x, y, q)) {
          origin[sq.pair(x, y)] = sq.pair(x, y);
          queue.push_back(sq.pair(x, y));
        }
      }
    }
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const TupleId t = queue[h];
      for (std::size_t i = pred.offset[t]; i < pred.offset[t + 1]; ++i) {
        const TupleId s = pred.from[i];
        if (origin[s] == kNoTuple) {
          origin[s] = origin[t];
          queue.push_back(s);
        }
      }
    }
    for (Node p = 0; p < sq.n; ++p) {
      const TupleId t = sq.pair(p, q);
      if (origin[t] != kNoTuple && sq.c_node(p, q) && candidate(p, q)) {
        const Node x = sq.space.component(origin[t], 0);
        const Node y = sq.space.component(origin[t], 1);
        return Witness{condition, {p, q, x, y}, {}, {}, description};
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> lt_condition_2(const Square& sq, const Predecessors& pred) {
  return reaches_bad_pair(
      sq, pred, [&](Node x, Node y, Node q) { return sq.ge[x][q] != sq.ge[y][q]; },
      [&](Node p, Node q) { return sq.ge[p][q]; }, "2",
      "C-node (p, q) with p >= q reaches (p', q') where exactly one of p' >= q, q' >= q holds");
}

Witness with_words(Witness w, const TransitionSemigroup& ts) {
  for (Element x : w.elements) w.words.push_back(ts.witnesses[x]);
  return w;
}

}  // namespace

Verdict check_local_testability_graph(const TransitionGraph& g, const Limits& limits) {
  require_complete(g, "local testability");
  const Square sq(g, limits);
  if (auto w = similar_c_node(sq)) return Verdict::fail("lt", std::move(*w));
  const Predecessors pred(sq);
  if (auto w = lt_condition_2(sq, pred)) return Verdict::fail("lt", std::move(*w));
  return Verdict::pass("lt");
}

Verdict check_right_lt_graph(const TransitionGraph& g, const Limits& limits) {
  require_complete(g, "right local testability");
  const Square sq(g, limits);
  if (auto w = similar_c_node(sq)) return Verdict::fail("right", std::move(*w));
  const Predecessors pred(sq);
  auto w = reaches_bad_pair(
      sq, pred, [&](Node x, Node y, Node q) { return sq.ge[x][q] && !sq.ge[y][q]; },
      [](Node, Node) { return true; }, "2", "C-node (p, q) reaches (p', q') with p' >= q but not q' >= q");
  if (w) return Verdict::fail("right", std::move(*w));
  return Verdict::pass("right");
}

Verdict check_local_idempotency_graph(const TransitionGraph& g, const Limits& limits) {
  require_complete(g, "local idempotency");
  const auto ts = transition_semigroup(g, limits);
  auto v = check_local_idempotency_semigroup(ts.semigroup);
  v.property = "li";
  if (v.witness) v.witness = with_words(std::move(*v.witness), ts);
  return v;
}

Verdict check_left_lt_graph(const TransitionGraph& g, const Limits& limits) {
  require_complete(g, "left local testability");
  auto li = check_local_idempotency_graph(g, limits);
  if (!li) {
    li.property = "left";
    li.witness->condition = "1 (" + li.witness->condition + ")";
    return li;
  }
  const Square sq(g, limits);
  const Predecessors pred(sq);
  if (auto w = lt_condition_2(sq, pred)) return Verdict::fail("left", std::move(*w));

  const ReachabilityRelation rel2(g, 2, limits);
  const TupleSpace cube(g, 3, limits);
  const auto cube_comps = scc(cube);
  const std::size_t n = g.node_count();
  for (TupleId t = 0; t < cube.size(); ++t) {
    if (!cube_comps.cyclic[cube_comps.component[t]]) continue;
    const Node p = cube.component(t, 0);
    const Node q = cube.component(t, 1);
    const Node r = cube.component(t, 2);
    if (q == r) continue;
    if (rel2.reach_or_equal(p * n + r, q * n + r) && rel2.reach_or_equal(p * n + q, r * n + q)) {
      return Verdict::fail("left", Witness{"3", {p, q, r}, {}, {},
                                           "C-node (p, q, r) with (p, r) >= (q, r), (p, q) >= (r, q) and r != q"});
    }
  }
  return Verdict::pass("left");
}

namespace {

// Threshold machinery: T sets for every triple, encoded per triple as the
// component id, kEmpty or kSpread.
constexpr std::uint32_t kEmpty = static_cast<std::uint32_t>(-1);
constexpr std::uint32_t kSpread = static_cast<std::uint32_t>(-2);

struct ThresholdContext {
  Square sq;
  ReachabilityRelation rel2;

  ThresholdContext(const TransitionGraph& g, const Limits& limits) : sq(g, limits), rel2(g, 2, limits) {}

  bool pair_ge(Node a, Node b, Node c, Node d) const noexcept {
    return rel2.reach_or_equal(sq.pair(a, b), sq.pair(c, d));
  }

  std::vector<Node> t_set(Node p, Node q, Node r1) const {
    std::vector<Node> out;
    for (Node t = 0; t < sq.n; ++t) {
      if (sq.ge[q][t] && sq.c_node(q, t) && pair_ge(p, r1, q, t)) out.push_back(t);
    }
    return out;
  }

  std::uint32_t code(const std::vector<Node>& t) const noexcept {
    if (t.empty()) return kEmpty;
    for (Node x : t) {
      if (sq.comp1[x] != sq.comp1[t.front()]) return kSpread;
    }
    return sq.comp1[t.front()];
  }

  bool admissible(Node p, Node q, Node r1) const noexcept {
    if (!sq.c_node(p, r1) || !sq.ge[p][q]) return false;
    for (Node r = 0; r < sq.n; ++r) {
      if (sq.c_node(q, r) && sq.ge[p][r] && sq.ge[r][r1]) return true;
    }
    return false;
  }
};

bool defined_code(std::uint32_t c) noexcept { return c != kEmpty && c != kSpread; }

}  // namespace

T3Context t3(const TransitionGraph& g, Node p, Node q, Node r1, const Limits& limits) {
  require_complete(g, "T3");
  const std::size_t n = g.node_count();
  if (p >= n || q >= n || r1 >= n) throw InvalidInput("T3 node out of range");
  const ThresholdContext ctx(g, limits);
  if (!ctx.admissible(p, q, r1)) {
    throw InvalidInput("inadmissible triple (" + std::to_string(p) + ", " + std::to_string(q) + ", " +
                       std::to_string(r1) + ")");
  }
  T3Context out{p, q, r1, ctx.t_set(p, q, r1), std::nullopt};
  const auto c = ctx.code(out.t);
  if (defined_code(c)) out.scc = c;
  return out;
}

Verdict check_threshold_lt_graph(const TransitionGraph& g, const Limits& limits) {
  require_complete(g, "threshold local testability");
  const ThresholdContext ctx(g, limits);
  const Square& sq = ctx.sq;
  const std::size_t n = sq.n;
  if (auto w = similar_c_node(sq)) return Verdict::fail("tlt", std::move(*w));

  // Condition 2.
  std::vector<Node> middle;
  for (Node p = 0; p < n; ++p) {
    for (Node r1 = 0; r1 < n; ++r1) {
      if (!sq.c_node(p, r1)) continue;
      middle.clear();
      for (Node r = 0; r < n; ++r) {
        if (sq.ge[p][r] && sq.ge[r][r1]) middle.push_back(r);
      }
      for (Node q = 0; q < n; ++q) {
        for (Node t = 0; t < n; ++t) {
          if (sq.ge[q][t] || !ctx.pair_ge(p, r1, q, t)) continue;
          for (Node r : middle) {
            if (sq.c_node(r, t)) {
              return Verdict::fail("tlt", Witness{"2", {p, r1, q, t, r}, {}, {},
                                                  "(p, r1) >= (q, t), p >= r >= r1, (r, t) a C-node, but not q >= t"});
            }
          }
        }
      }
    }
  }

  // Condition 3, and the T3 table for condition 4.
  std::vector<std::uint32_t> code(n * n * n, kEmpty);
  auto at = [n](Node a, Node b, Node c) { return (static_cast<std::size_t>(a) * n + b) * n + c; };
  for (Node p = 0; p < n; ++p) {
    for (Node q = 0; q < n; ++q) {
      for (Node r1 = 0; r1 < n; ++r1) {
        const auto t = ctx.t_set(p, q, r1);
        code[at(p, q, r1)] = ctx.code(t);
        if (!defined_code(code[at(p, q, r1)]) && ctx.admissible(p, q, r1)) {
          return Verdict::fail("tlt", Witness{"3", {p, q, r1}, {}, {},
                                              t.empty() ? "admissible triple with empty T"
                                                        : "admissible triple whose T spans several components"});
        }
      }
    }
  }

  // Condition 4.
  auto same = [](std::uint32_t a, std::uint32_t b) { return defined_code(a) ? a == b : !defined_code(b); };
  for (Node p = 0; p < n; ++p) {
    for (Node q1 = 0; q1 < n; ++q1) {
      if (!sq.c_node(p, q1)) continue;
      for (Node q = 0; q < n; ++q) {
        if (!sq.ge[p][q]) continue;
        for (Node r = 0; r < n; ++r) {
          if (!sq.ge[p][r] || !sq.c_node(q, r)) continue;
          for (Node r1 = 0; r1 < n; ++r1) {
            if (!sq.c_node(p, r1) || !ctx.pair_ge(q, r, q1, r1)) continue;
            if (!same(code[at(p, q, r1)], code[at(p, r, q1)])) {
              return Verdict::fail("tlt", Witness{"4", {p, q, r, q1, r1}, {}, {},
                                                  "T3(p, q, r1) differs from T3(p, r, q1)"});
            }
          }
        }
      }
    }
  }
  return Verdict::pass("tlt");
}

Verdict check_piecewise_graph(const TransitionGraph& g) {
  auto comps = scc(g, 1);
  for (Node p = 0; p < g.node_count(); ++p) {
    if (comps.size[comps.component[p]] > 1) {
      for (Node q = 0; q < g.node_count(); ++q) {
        if (q != p && comps.component[q] == comps.component[p]) {
          return Verdict::fail("pw", Witness{"i", {p, q}, {}, {}, "p and q lie on a common cycle"});
        }
      }
    }
  }

  const std::size_t n = g.node_count();
  const std::size_t letters = g.letter_count();
  // Per stabilizer: component of each node and the maximal nodes per component.
  struct Restricted {
    std::vector<Node> root;
    std::vector<std::vector<Node>> maximal;  // indexed by root
  };
  std::map<std::vector<bool>, Restricted> cache;
  auto build = [&](const std::vector<bool>& mask) {
    std::vector<Node> parent(n);
    for (Node x = 0; x < n; ++x) parent[x] = x;
    auto find = [&](Node x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<bool> is_max(n, true);
    for (Node x = 0; x < n; ++x) {
      for (Letter a = 0; a < letters; ++a) {
        const Node y = g.target(x, a);
        if (!mask[a] || y == kUndefined || y == x) continue;
        is_max[x] = false;
        parent[find(x)] = find(y);
      }
    }
    Restricted r{std::vector<Node>(n), std::vector<std::vector<Node>>(n)};
    for (Node x = 0; x < n; ++x) {
      r.root[x] = find(x);
      if (is_max[x]) r.maximal[r.root[x]].push_back(x);
    }
    return r;
  };
  for (Node p = 0; p < n; ++p) {
    std::vector<bool> mask(letters, false);
    for (Letter a : stabilizer(g, p)) mask[a] = true;
    auto it = cache.find(mask);
    if (it == cache.end()) it = cache.emplace(mask, build(mask)).first;
    const auto& maximal = it->second.maximal[it->second.root[p]];
    if (maximal.size() != 1) {
      Witness w{"ii", {p}, {}, {}, "component of p under its stabilizer has " + std::to_string(maximal.size()) +
                                       " maximal nodes"};
      w.nodes.insert(w.nodes.end(), maximal.begin(), maximal.begin() + std::min<std::size_t>(2, maximal.size()));
      return Verdict::fail("pw", std::move(w));
    }
  }
  return Verdict::pass("pw");
}

namespace {

// Shortest words from the initial state to every state.
std::vector<std::vector<Letter>> access_words(const AcceptorDfa& a) {
  std::vector<std::vector<Letter>> out(a.graph.node_count());
  std::vector<bool> seen(a.graph.node_count(), false);
  std::deque<Node> queue{a.initial};
  seen[a.initial] = true;
  while (!queue.empty()) {
    const Node p = queue.front();
    queue.pop_front();
    for (Letter c = 0; c < a.graph.letter_count(); ++c) {
      const Node q = a.graph.target(p, c);
      if (!seen[q]) {
        seen[q] = true;
        out[q] = out[p];
        out[q].push_back(c);
        queue.push_back(q);
      }
    }
  }
  return out;
}

// Shortest v with exactly one of x.v, y.v final; x != y in a minimal acceptor.
std::vector<Letter> separating_suffix(const AcceptorDfa& a, Node x, Node y) {
  const std::size_t n = a.graph.node_count();
  std::vector<std::pair<std::size_t, Letter>> parent(n * n, {static_cast<std::size_t>(-1), 0});
  std::vector<bool> seen(n * n, false);
  std::deque<std::size_t> queue{x * n + y};
  seen[x * n + y] = true;
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    if (a.is_final(static_cast<Node>(s / n)) != a.is_final(static_cast<Node>(s % n))) {
      std::vector<Letter> v;
      for (std::size_t t = s; t != x * n + y; t = parent[t].first) v.push_back(parent[t].second);
      std::reverse(v.begin(), v.end());
      return v;
    }
    for (Letter c = 0; c < a.graph.letter_count(); ++c) {
      const std::size_t t = a.graph.target(static_cast<Node>(s / n), c) * n + a.graph.target(static_cast<Node>(s % n), c);
      if (!seen[t]) {
        seen[t] = true;
        parent[t] = {s, c};
        queue.push_back(t);
      }
    }
  }
  throw InternalInconsistency("states of a minimal acceptor are not separable");
}

}  // namespace

Verdict check_k_testability_graph(const AcceptorDfa& input, std::size_t k, const Limits& limits) {
  if (k == 0) throw InvalidInput("k must be at least 1");
  const std::string property = "k-test k=" + std::to_string(k);
  const AcceptorDfa a = minimize_dfa(without_empty_word(input));
  const std::size_t n = a.graph.node_count();
  const std::size_t g = a.graph.letter_count();
  const std::size_t m = k - 1;
  std::size_t windows = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (windows > limits.scanner_cap / g) throw CapExceeded("too many (k-1)-words", windows, limits.scanner_cap);
    windows *= g;
  }
  const auto access = access_words(a);

  auto word_of_window = [&](std::size_t f) {
    std::vector<Letter> w(m);
    for (std::size_t i = m; i-- > 0; f /= g) w[i] = static_cast<Letter>(f % g);
    return w;
  };
  auto shift = [&](std::size_t f, Letter c) { return m == 0 ? 0 : (f * g + c) % windows; };

  for (std::size_t f = 0; f < windows; ++f) {
    const auto fw = word_of_window(f);
    // States reached by words ending in f, with one such word each.
    std::vector<Node> xs;
    std::vector<std::vector<Letter>> xs_word;
    std::vector<std::uint32_t> index(n, static_cast<std::uint32_t>(-1));
    for (Node y = 0; y < n; ++y) {
      const Node x = a.graph.run(y, fw);
      if (index[x] == static_cast<std::uint32_t>(-1)) {
        index[x] = static_cast<std::uint32_t>(xs.size());
        xs.push_back(x);
        auto w = access[y];
        w.insert(w.end(), fw.begin(), fw.end());
        xs_word.push_back(std::move(w));
      }
    }

    // Maps of the words c with fc ending in f, restricted to xs.
    struct Item {
      std::size_t window;
      std::vector<Node> image;
      std::size_t parent;
      Letter letter;
    };
    constexpr std::size_t kRoot = static_cast<std::size_t>(-1);
    std::vector<Item> items;
    std::unordered_map<std::vector<Node>, std::size_t, boost::hash<std::vector<Node>>> seen;
    auto expand = [&](std::size_t window, const std::vector<Node>& image, std::size_t parent) {
      for (Letter c = 0; c < g; ++c) {
        std::vector<Node> next(image.size());
        for (std::size_t i = 0; i < image.size(); ++i) next[i] = a.graph.target(image[i], c);
        const std::size_t w = shift(window, c);
        auto key = next;
        key.push_back(static_cast<Node>(w));
        if (seen.try_emplace(std::move(key), items.size()).second) {
          if (items.size() >= limits.scanner_cap) {
            throw CapExceeded("closed-walk closure too large", items.size(), limits.scanner_cap);
          }
          items.push_back(Item{w, std::move(next), parent, c});
        }
      }
    };
    expand(f, xs, kRoot);
    for (std::size_t h = 0; h < items.size(); ++h) {
      const auto image = items[h].image;
      expand(items[h].window, image, h);
    }
    std::vector<std::size_t> loops;
    for (std::size_t h = 0; h < items.size(); ++h) {
      if (items[h].window == f) loops.push_back(h);
    }
    auto word = [&](std::size_t h) {
      std::vector<Letter> w;
      for (; h != kRoot; h = items[h].parent) w.push_back(items[h].letter);
      std::reverse(w.begin(), w.end());
      return w;
    };
    auto fail = [&](std::size_t i, std::size_t c1, std::size_t c2, Node left, Node right, const char* what) {
      auto u = xs_word[i];
      auto w1 = u;
      auto w2 = u;
      for (auto h : {c1, c2}) {
        auto c = word(h);
        w1.insert(w1.end(), c.begin(), c.end());
      }
      for (auto h : {c2, c1}) {
        auto c = word(h);
        w2.insert(w2.end(), c.begin(), c.end());
      }
      if (c1 == c2) w2.resize(w2.size() - word(c1).size());
      const auto v = separating_suffix(a, left, right);
      w1.insert(w1.end(), v.begin(), v.end());
      w2.insert(w2.end(), v.begin(), v.end());
      if (!a.accepts(w1)) std::swap(w1, w2);
      Witness w;
      w.condition = what;
      w.words = {std::move(w1), std::move(w2)};
      w.description = "first word accepted, second rejected";
      return Verdict::fail(property, std::move(w));
    };
    for (std::size_t c1 : loops) {
      const auto& x1 = items[c1].image;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        const Node once = x1[i];
        const Node twice = x1[index[once]];
        if (once != twice) return fail(i, c1, c1, twice, once, "closed walk not idempotent");
      }
    }
    for (std::size_t s = 0; s < loops.size(); ++s) {
      const auto& x1 = items[loops[s]].image;
      for (std::size_t t = s + 1; t < loops.size(); ++t) {
        const auto& x2 = items[loops[t]].image;
        for (std::size_t i = 0; i < xs.size(); ++i) {
          const Node l = x2[index[x1[i]]];
          const Node r = x1[index[x2[i]]];
          if (l != r) return fail(i, loops[s], loops[t], l, r, "closed walks do not commute");
        }
      }
    }
  }
  return Verdict::pass(property);
}

OrderBounds order_bounds_graph(const AcceptorDfa& input, std::size_t cap, const Limits& limits) {
  if (cap == 0) throw InvalidInput("order cap must be at least 1");
  const AcceptorDfa a = minimize_dfa(without_empty_word(input));
  OrderBounds out{check_local_testability_graph(a.graph, limits), std::nullopt, cap, false};
  if (!out.lt) return out;
  for (std::size_t k = 1; k <= cap; ++k) {
    if (check_k_testability_graph(a, k, limits)) {
      out.order = k;
      return out;
    }
  }
  out.above_cap = true;
  return out;
}

}  // namespace ltest
