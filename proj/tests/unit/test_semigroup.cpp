#include <algorithm>
#include <catch_amalgamated.hpp>
#include <random>

#include "brute.hpp"
#include "fixtures.hpp"
#include "ltest/error.hpp"
#include "ltest/semigroup.hpp"

using namespace ltest;

namespace {

std::vector<Element> full_table(const FiniteSemigroup& s) { return {s.table().begin(), s.table().end()}; }

bool subset(const std::vector<Element>& a, const std::vector<Element>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TEST_CASE("parse_semigroup reads Cayley rows", "[semigroup]") {
  auto one = parse_semigroup("semigroup 1 1\n0\n");
  CHECK(one.size() == 1);
  CHECK(idempotents(one) == std::vector<Element>{0});

  auto a2 = fixtures::semigroup("a2.sg");
  CHECK(a2.size() == 5);
  CHECK(a2.generator_count() == 2);
  CHECK(full_table(a2) == full_table(make_a2()));
}

TEST_CASE("parse_semigroup rejects bad input", "[semigroup]") {
  CHECK_THROWS_WITH(parse_semigroup("semigroup 2 1\n2\n0\n"), Catch::Matchers::ContainsSubstring("not closed"));
  CHECK_THROWS_AS(parse_semigroup("semigroup 2 1\n0\n"), ParseError);
  CHECK_THROWS_AS(parse_semigroup("semigroup 2 3\n0 0 0\n0 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_semigroup("magma 2 1\n0\n0\n"), ParseError);
  // Element 1 is never reached from generator 0.
  CHECK_THROWS_WITH(parse_semigroup("semigroup 2 1\n0\n1\n"),
                    Catch::Matchers::ContainsSubstring("not a product of generators"));
  CHECK_THROWS_AS(parse_semigroup("semigroup 3 1\n1\n2\n0\n", Limits{.semigroup_cap = 2}), CapExceeded);
}

TEST_CASE("serialize_semigroup round trips", "[semigroup]") {
  for (const auto& s : {make_a2(), fixtures::z2(), fixtures::semilattice2(), a2_power(2)}) {
    auto again = parse_semigroup(serialize_semigroup(s));
    CHECK(again.size() == s.size());
    CHECK(again.generator_count() == s.generator_count());
    CHECK(full_table(again) == full_table(s));
  }
}

TEST_CASE("light_associativity_test on groups and A2", "[semigroup]") {
  // Z3 under addition, generated by 1.
  std::vector<Element> z3 = {0, 1, 2, 1, 2, 0, 2, 0, 1};
  std::vector<Element> gens = {1};
  CHECK_FALSE(light_associativity_test(3, z3, gens));

  auto a2 = make_a2();
  std::vector<Element> a2_gens = {0, 1};
  CHECK_FALSE(light_associativity_test(5, a2.table(), a2_gens));
}

TEST_CASE("light_associativity_test on the two-element table with 0*0 = 1", "[semigroup]") {
  // 1 is an identity and 0 has order two: this is Z2, so it is associative.
  std::vector<Element> t = {1, 0, 0, 1};
  std::vector<Element> gens = {0};
  CHECK(brute::associative(2, t));
  CHECK_FALSE(light_associativity_test(2, t, gens));
}

TEST_CASE("light_associativity_test reports a violating triple", "[semigroup]") {
  // x * y = x + 1 mod 3, generated by 0.
  std::vector<Element> t(9);
  for (Element x = 0; x < 3; ++x)
    for (Element y = 0; y < 3; ++y) t[x * 3 + y] = (x + 1) % 3;
  std::vector<Element> gens = {0};
  auto v = light_associativity_test(3, t, gens);
  REQUIRE(v);
  const Element j = v->generator;
  CHECK(t[t[v->a * 3 + j] * 3 + v->b] != t[v->a * 3 + t[j * 3 + v->b]]);
  CHECK_FALSE(brute::associative(3, t));
}

TEST_CASE("A2 facts", "[semigroup]") {
  auto s = make_a2();
  enum : Element { a, b, ab, ba, zero };
  CHECK(s.size() == 5);
  CHECK(s.generator_count() == 2);
  CHECK(idempotents(s) == std::vector<Element>{a, ab, ba, zero});
  CHECK_FALSE(is_idempotent(s, b));
  CHECK(omega_power(s, b) == zero);
  CHECK(s.product(ab, ab) == ab);
  CHECK(s.product(b, b) == zero);
  CHECK(s.product({a, b, a}) == a);
  CHECK(s.product({b, a, b}) == b);
  for (Element x = 0; x < 5; ++x) {
    CHECK(s.product(zero, x) == zero);
    CHECK(s.product(x, zero) == zero);
  }
  CHECK(s.name(ba) == "ba");
  CHECK(s.word(ab) == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("omega_power of an idempotent is itself", "[semigroup]") {
  for (const auto& s : {make_a2(), fixtures::semilattice2(), fixtures::z2()}) {
    for (Element e : idempotents(s)) CHECK(omega_power(s, e) == e);
  }
  auto z2 = fixtures::z2();
  CHECK(omega_power(z2, 0) == 1);
}

TEST_CASE("power ideals", "[semigroup]") {
  auto band = fixtures::semilattice2();
  for (std::size_t m = 1; m <= 4; ++m) CHECK(power_ideal(band, m) == std::vector<Element>{0, 1});

  auto null = fixtures::null2();
  CHECK(power_ideal(null, 2) == std::vector<Element>{1});
  CHECK(power_chain(null).stabilization_index == 2);

  auto a2 = make_a2();
  CHECK(power_ideal(a2, 2).size() == 5);
  CHECK(power_chain(a2).stabilization_index == 1);
  CHECK_THROWS_AS(power_ideal(a2, 0), InvalidInput);
}

TEST_CASE("product_semigroups sizes and generator counts", "[semigroup]") {
  auto a2 = make_a2();
  auto sq = product_semigroups(a2, a2);
  CHECK(sq.size() == 25);
  CHECK(sq.generator_count() == 16);

  auto z2z2 = product_semigroups(fixtures::z2(), fixtures::z2());
  CHECK(z2z2.size() == 4);
  CHECK(z2z2.generator_count() == 3);

  auto with_trivial = product_semigroups(a2, fixtures::trivial());
  CHECK(with_trivial.size() == 5);
  CHECK(with_trivial.generator_count() == 5);

  CHECK(a2_power(3).size() == 125);
  CHECK_THROWS_AS(a2_power(3, Limits{.semigroup_cap = 100}), CapExceeded);
  CHECK(sq.name(0) == "(a,a)");
}

TEST_CASE("product multiplication is componentwise", "[semigroup][property]") {
  std::vector<FiniteSemigroup> factors = {make_a2(), fixtures::z2(), fixtures::semilattice2(), fixtures::null2(),
                                          fixtures::trivial()};
  for (const auto& s1 : factors) {
    for (const auto& s2 : factors) {
      auto p = product_semigroups(s1, s2);
      auto pairs = product_pairs(s1, s2);
      REQUIRE(p.size() == s1.size() * s2.size());
      std::vector<Element> index(p.size());
      for (Element i = 0; i < p.size(); ++i) index[pairs[i].first * s2.size() + pairs[i].second] = i;
      for (Element i = 0; i < p.size(); ++i) {
        for (Element j = 0; j < p.size(); ++j) {
          const auto [x1, x2] = pairs[i];
          const auto [y1, y2] = pairs[j];
          CHECK(p.product(i, j) == index[s1.product(x1, y1) * s2.size() + s2.product(x2, y2)]);
        }
      }
      CHECK(brute::associative(p.size(), full_table(p)));
    }
  }
}

TEST_CASE("power ideal chain descends", "[semigroup][property]") {
  for (const auto& s : {make_a2(), fixtures::null2(), fixtures::semilattice2(), a2_power(2)}) {
    auto chain = power_chain(s);
    for (std::size_t m = 1; m < chain.powers.size(); ++m) {
      CHECK(subset(chain.powers[m], chain.powers[m - 1]));
      CHECK(chain.powers[m] != chain.powers[m - 1]);
    }
  }
}

TEST_CASE("Light's test agrees with brute force on random magmas", "[semigroup][property]") {
  std::mt19937_64 rng(7);
  int associative_seen = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 30;
    std::vector<Element> t(n * n);
    // Odd trials start from an associative table and may flip one entry.
    if (trial % 2 == 0) {
      for (auto& x : t) x = static_cast<Element>(rng() % n);
    } else {
      // x * y = max(x, y) or a cyclic group, then maybe one flipped entry.
      const bool group = rng() % 2 == 0;
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) t[x * n + y] = group ? (x + y) % n : std::max(x, y);
      if (rng() % 2 == 0) t[rng() % (n * n)] = static_cast<Element>(rng() % n);
    }
    auto gens = brute::right_generating_set(n, t);
    const bool expected = brute::associative(n, t);
    associative_seen += expected;
    CHECK(!light_associativity_test(n, t, gens) == expected);
  }
  CHECK(associative_seen > 10);
}
