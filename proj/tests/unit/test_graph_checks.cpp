#include <catch_amalgamated.hpp>
#include <random>

#include "brute.hpp"
#include "fixtures.hpp"
#include "ltest/bridge.hpp"
#include "ltest/error.hpp"
#include "ltest/graph_checks.hpp"
#include "ltest/reachability.hpp"
#include "ltest/semigroup_checks.hpp"

using namespace ltest;

namespace {

// Reflexive node reachability by plain search.
bool ge(const TransitionGraph& g, Node x, Node q) { return x == q || brute::reach(g, {x}, {q}); }
bool pair_ge(const TransitionGraph& g, Node a, Node b, Node c, Node d) {
  return (a == c && b == d) || brute::reach(g, {a, b}, {c, d});
}
bool c_node(const TransitionGraph& g, std::vector<Node> t) { return brute::reach(g, t, t); }

// Re-derives the violation described by a failed witness.
void check_witness(const TransitionGraph& g, const Verdict& v) {
  REQUIRE(v.witness);
  const auto& w = *v.witness;
  const auto& x = w.nodes;
  INFO(v.property << " condition " << w.condition);
  if (v.property == "lt" || v.property == "right" || v.property == "left" || v.property == "tlt") {
    if (w.condition == "1") {
      REQUIRE(x.size() == 2);
      CHECK(x[0] != x[1]);
      CHECK(c_node(g, {x[0], x[1]}));
      CHECK(ge(g, x[0], x[1]));
      CHECK(ge(g, x[1], x[0]));
      return;
    }
  }
  if ((v.property == "lt" || v.property == "left") && w.condition == "2") {
    REQUIRE(x.size() == 4);
    const Node p = x[0], q = x[1];
    CHECK(c_node(g, {p, q}));
    CHECK(ge(g, p, q));
    CHECK(brute::reach(g, {p, q}, {x[2], x[3]}));
    CHECK(ge(g, x[2], q) != ge(g, x[3], q));
    return;
  }
  if (v.property == "right" && w.condition == "2") {
    REQUIRE(x.size() == 4);
    CHECK(c_node(g, {x[0], x[1]}));
    CHECK(brute::reach(g, {x[0], x[1]}, {x[2], x[3]}));
    CHECK(ge(g, x[2], x[1]));
    CHECK_FALSE(ge(g, x[3], x[1]));
    return;
  }
  if (v.property == "left" && w.condition == "3") {
    REQUIRE(x.size() == 3);
    const Node p = x[0], q = x[1], r = x[2];
    CHECK(c_node(g, {p, q, r}));
    CHECK(pair_ge(g, p, r, q, r));
    CHECK(pair_ge(g, p, q, r, q));
    CHECK(r != q);
    return;
  }
  if (v.property == "tlt" && w.condition == "2") {
    REQUIRE(x.size() == 5);
    const Node p = x[0], r1 = x[1], q = x[2], t = x[3], r = x[4];
    CHECK(c_node(g, {p, r1}));
    CHECK(pair_ge(g, p, r1, q, t));
    CHECK(ge(g, p, r));
    CHECK(ge(g, r, r1));
    CHECK(c_node(g, {r, t}));
    CHECK_FALSE(ge(g, q, t));
    return;
  }
  if (v.property == "tlt" && w.condition == "3") {
    REQUIRE(x.size() == 3);
    CHECK_FALSE(t3(g, x[0], x[1], x[2]).well_defined());
    return;
  }
  if (v.property == "tlt" && w.condition == "4") {
    REQUIRE(x.size() == 5);
    const Node p = x[0], q = x[1], r = x[2], q1 = x[3], r1 = x[4];
    CHECK(pair_ge(g, q, r, q1, r1));
    auto left = t3(g, p, q, r1);
    auto right = t3(g, p, r, q1);
    CHECK(left.scc != right.scc);
    return;
  }
  if (v.property == "pw" && w.condition == "i") {
    REQUIRE(x.size() == 2);
    CHECK(x[0] != x[1]);
    CHECK(brute::reach(g, {x[0]}, {x[1]}));
    CHECK(brute::reach(g, {x[1]}, {x[0]}));
    return;
  }
  if (v.property == "pw" && w.condition == "ii") {
    REQUIRE(x.size() == 3);
    // Two distinct nodes without an exit inside the stabilizer of p.
    const auto letters = stabilizer(g, x[0]);
    for (Node m : {x[1], x[2]}) {
      for (Letter a : letters) CHECK((!g.defined(m, a) || g.target(m, a) == m));
    }
    CHECK(x[1] != x[2]);
    return;
  }
  if (v.property == "li" || (v.property == "left" && w.condition.starts_with("1 ("))) {
    REQUIRE(w.elements.size() == w.words.size());
    return;
  }
  FAIL("unexpected witness " << v.property << " " << w.condition);
}

}  // namespace

TEST_CASE("every check accepts the one-node graph", "[graph-decisions]") {
  for (std::size_t letters : {1, 2}) {
    auto g = fixtures::loop(letters);
    CHECK(check_local_testability_graph(g));
    CHECK(check_right_lt_graph(g));
    CHECK(check_left_lt_graph(g));
    CHECK(check_local_idempotency_graph(g));
    CHECK(check_threshold_lt_graph(g));
    CHECK(check_piecewise_graph(g));
  }
  auto t = t3(fixtures::loop(), 0, 0, 0);
  CHECK(t.t == std::vector<Node>{0});
  CHECK(t.well_defined());
}

TEST_CASE("the swap graph fails every check", "[graph-decisions]") {
  auto g = fixtures::z2_swap();
  for (auto v : {check_local_testability_graph(g), check_right_lt_graph(g), check_threshold_lt_graph(g)}) {
    CHECK_FALSE(v);
    REQUIRE(v.witness);
    CHECK(v.witness->condition == "1");
    CHECK(v.witness->nodes.size() == 2);
  }
  auto left = check_left_lt_graph(g);
  CHECK_FALSE(left);
  CHECK(left.witness->condition.starts_with("1"));
  auto li = check_local_idempotency_graph(g);
  CHECK_FALSE(li);
  CHECK_FALSE(li.witness->words.empty());
  auto pw = check_piecewise_graph(g);
  CHECK_FALSE(pw);
  CHECK(pw.witness->condition == "i");
  auto order = order_bounds_graph(make_acceptor(g, 0, {0}));
  CHECK_FALSE(order.lt);
  CHECK_FALSE(order.order);
}

TEST_CASE("words containing a", "[graph-decisions]") {
  auto a = fixtures::acceptor("contains_a.tg");
  CHECK(check_local_testability_graph(a.graph));
  CHECK(check_threshold_lt_graph(a.graph));
  CHECK(check_k_testability_graph(a, 1));
  CHECK(order_bounds_graph(a).order == 1u);
  // Admissible triples give well defined T sets.
  std::size_t admissible = 0;
  for (Node p = 0; p < 2; ++p)
    for (Node q = 0; q < 2; ++q)
      for (Node r = 0; r < 2; ++r) {
        std::optional<T3Context> t;
        try {
          t = t3(a.graph, p, q, r);
        } catch (const InvalidInput&) {
          continue;
        }
        CHECK(t->well_defined());
        ++admissible;
      }
  CHECK(admissible > 0);
}

TEST_CASE("reset graph is right and left locally testable", "[graph-decisions]") {
  auto g = fixtures::reset2();
  CHECK(check_right_lt_graph(g));
  CHECK(check_left_lt_graph(g));
  CHECK(check_local_idempotency_graph(g));
  auto s = transition_semigroup(g).semigroup;
  CHECK(check_right_lt_semigroup(s));
  CHECK(check_left_lt_semigroup(s));
  // Right zero band: x * y = y.
  for (Element x = 0; x < s.size(); ++x)
    for (Element y = 0; y < s.size(); ++y) CHECK(s.product(x, y) == y);
}

TEST_CASE("at least two a's is threshold but not locally testable", "[graph-decisions]") {
  auto g = fixtures::graph("two_a.tg");
  auto lt = check_local_testability_graph(g);
  CHECK_FALSE(lt);
  check_witness(g, lt);
  CHECK(check_threshold_lt_graph(g));
}

TEST_CASE("a later followed by b is piecewise testable", "[graph-decisions]") {
  auto g = fixtures::graph("a_then_b.tg");
  CHECK(is_acyclic(g));
  CHECK(check_piecewise_graph(g));
}

TEST_CASE("piecewise check accepts partial graphs", "[graph-decisions]") {
  auto g = fixtures::graph("partial.tg");
  CHECK_NOTHROW(check_piecewise_graph(g));
  CHECK_THROWS_AS(check_local_testability_graph(g), InvalidInput);
  CHECK_THROWS_AS(check_threshold_lt_graph(g), InvalidInput);
}

TEST_CASE("t3 can span two components", "[graph-decisions]") {
  // Nodes 0 and 2 form a cycle under a; b leads from 0 to the absorbing node 1.
  auto g = parse_graph("graph 3 2\n2 1\n1 1\n0 0\n");
  auto t = t3(g, 0, 0, 2);
  CHECK(t.t.size() == 2);
  CHECK_FALSE(t.well_defined());
  const auto comps = scc(g, 1);
  CHECK(comps.component[t.t[0]] != comps.component[t.t[1]]);
  auto v = check_threshold_lt_graph(g);
  CHECK_FALSE(v);
  check_witness(g, v);
}

TEST_CASE("t3 rejects inadmissible triples", "[graph-decisions]") {
  auto g = fixtures::chain3();
  // (0, 0) is not a C-node of the square.
  CHECK_THROWS_WITH(t3(g, 0, 0, 0), Catch::Matchers::ContainsSubstring("inadmissible triple"));
}

TEST_CASE("k-testability of small languages", "[graph-decisions]") {
  auto ab = fixtures::acceptor("ab_plus.tg");
  CHECK_FALSE(check_k_testability_graph(ab, 1));
  CHECK(check_k_testability_graph(ab, 2));
  CHECK(order_bounds_graph(ab).order == 2u);

  auto all = fixtures::acceptor("loop1.tg");
  for (std::size_t k = 1; k <= 4; ++k) CHECK(check_k_testability_graph(all, k));
  CHECK(order_bounds_graph(all).order == 1u);

  auto v = check_k_testability_graph(ab, 1);
  REQUIRE(v.witness);
  REQUIRE(v.witness->words.size() == 2);
  const ScanParams params{LanguageClass::kTestable, 1, 1, 2};
  CHECK(scan(v.witness->words[0], params) == scan(v.witness->words[1], params));
  CHECK(ab.accepts(v.witness->words[0]));
  CHECK_FALSE(ab.accepts(v.witness->words[1]));
}

TEST_CASE("order bounds report above the cap", "[graph-decisions]") {
  auto a = fixtures::acceptor("nilpotent.tg");
  auto full = order_bounds_graph(a, 4);
  CHECK(full.order == 4u);
  auto capped = order_bounds_graph(a, 3);
  CHECK(capped.lt);
  CHECK_FALSE(capped.order);
  CHECK(capped.above_cap);
  CHECK(capped.cap == 3);
}

TEST_CASE("graph witnesses re-check on the corpus", "[graph-decisions][property]") {
  std::size_t failures = 0;
  for (const auto& a : random_corpus(5, 200, 5, 3)) {
    const auto& g = a.graph;
    for (const auto& v : {check_local_testability_graph(g), check_right_lt_graph(g), check_left_lt_graph(g),
                          check_threshold_lt_graph(g), check_piecewise_graph(g), check_local_idempotency_graph(g)}) {
      if (v.holds) {
        CHECK_FALSE(v.witness);
        continue;
      }
      ++failures;
      check_witness(g, v);
    }
  }
  CHECK(failures > 100);
}

TEST_CASE("reachability realizes the quantifier over S", "[graph-decisions][property]") {
  for (const auto& a : random_corpus(6, 200, 5, 3)) {
    CHECK(check_local_testability_graph(a.graph).holds == brute::lt_over_elements(a.graph));
    CHECK(check_right_lt_graph(a.graph).holds == brute::right_lt_over_elements(a.graph));
  }
}
