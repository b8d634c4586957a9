#include <catch_amalgamated.hpp>
#include <random>

#include "brute.hpp"
#include "fixtures.hpp"
#include "ltest/error.hpp"
#include "ltest/oracle.hpp"
#include "ltest/scanner.hpp"

using namespace ltest;

namespace {

std::vector<Letter> w(const std::string& s) {
  std::vector<Letter> out;
  for (char c : s) out.push_back(static_cast<Letter>(c - 'a'));
  return out;
}

constexpr LanguageClass kAllClasses[] = {LanguageClass::kTestable, LanguageClass::kThreshold,
                                         LanguageClass::kStrictly, LanguageClass::kStrongly,
                                         LanguageClass::kRight,    LanguageClass::kLeft,
                                         LanguageClass::kPiecewise};

bool same_language(const AcceptorDfa& x, const AcceptorDfa& y, std::size_t max_length) {
  for (const auto& word : brute::words(x.graph.letter_count(), max_length)) {
    if (x.accepts(word) != y.accepts(word)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("scan follows the class definitions", "[oracle]") {
  const ScanParams k2{LanguageClass::kTestable, 2, 1, 2};
  auto abab = scan(w("abab"), k2);
  CHECK(abab.prefix == w("a"));
  CHECK(abab.suffix == w("b"));
  // Factor codes: aa = 0, ab = 1, ba = 2, bb = 3.
  CHECK(abab.counts == std::vector<std::uint8_t>{0, 1, 1, 0});

  auto a = scan(w("a"), k2);
  CHECK(a.prefix == w("a"));
  CHECK(a.suffix == w("a"));
  CHECK(a.counts == std::vector<std::uint8_t>{0, 0, 0, 0});

  const ScanParams threshold{LanguageClass::kThreshold, 1, 2, 2};
  auto aabaa = scan(w("aabaa"), threshold);
  CHECK(aabaa.counts == std::vector<std::uint8_t>{2, 1});
  CHECK(aabaa.prefix.empty());

  const ScanParams strictly{LanguageClass::kStrictly, 2, 1, 2};
  CHECK(scan(w("abba"), strictly).prefix == w("ab"));
  CHECK(scan(w("abba"), strictly).suffix == w("ba"));

  const ScanParams strongly{LanguageClass::kStrongly, 2, 1, 2};
  CHECK(scan(w("aab"), strongly) != scan(w("baab"), strongly));
  CHECK(scan(w("aab"), strongly) == scan(w("aaab"), strongly));

  const ScanParams right{LanguageClass::kRight, 1, 1, 2};
  CHECK(scan(w("ab"), right).first_occurrence != scan(w("ba"), right).first_occurrence);
  CHECK(scan(w("aab"), right) == scan(w("abb"), right));

  const ScanParams piecewise{LanguageClass::kPiecewise, 2, 1, 2};
  CHECK(scan(w("ab"), piecewise) != scan(w("ba"), piecewise));
  CHECK(scan(w("aba"), piecewise) != scan(w("abba"), piecewise));
  CHECK(scan(w("abab"), piecewise) == scan(w("baba"), piecewise));
}

TEST_CASE("scanner states carry the signature", "[oracle][property]") {
  for (std::size_t letters : {1, 2, 3}) {
    for (auto cls : kAllClasses) {
      if (cls == LanguageClass::kLeft) continue;
      for (std::size_t k : {1, 2, 3}) {
        const ScanParams params{cls, k, 2, letters};
        const Scanner scanner(params);
        const std::size_t length = letters == 3 ? 6 : 8;
        for (const auto& word : brute::words(letters, length)) {
          auto state = scanner.start(word[0]);
          for (std::size_t i = 1; i < word.size(); ++i) state = scanner.step(state, word[i]);
          INFO(to_string(cls) << " k=" << k << " " << word_string(word));
          REQUIRE(scanner.signature(state) == scan(word, params));
        }
      }
    }
  }
}

TEST_CASE("Scanner rejects the left class", "[oracle]") {
  CHECK_THROWS_AS(Scanner(ScanParams{LanguageClass::kLeft, 1, 1, 2}), InvalidInput);
  CHECK(language_class_from_string(to_string(LanguageClass::kRight)) == LanguageClass::kRight);
  CHECK_THROWS_AS(language_class_from_string("regular"), InvalidInput);
}

TEST_CASE("decide_exact on small languages", "[oracle]") {
  auto all = fixtures::acceptor("loop1.tg");
  for (auto cls : kAllClasses)
    for (std::size_t k : {1, 2, 3}) CHECK(decide_exact(all, {cls, k, 2, 1}));

  auto ab = fixtures::acceptor("ab_plus.tg");
  CHECK(decide_exact(ab, {LanguageClass::kTestable, 2, 1, 2}));
  auto v = decide_exact(ab, {LanguageClass::kTestable, 1, 1, 2});
  CHECK_FALSE(v);
  REQUIRE(v.witness);
  REQUIRE(v.witness->words.size() == 2);
  CHECK(ab.accepts(v.witness->words[0]) != ab.accepts(v.witness->words[1]));

  auto two = fixtures::acceptor("two_a.tg");
  CHECK(decide_exact(two, {LanguageClass::kThreshold, 1, 2, 2}));
  for (std::size_t k = 1; k <= 4; ++k) CHECK_FALSE(decide_exact(two, {LanguageClass::kTestable, k, 1, 2}));
  CHECK(brute::constant_on_classes(two, {LanguageClass::kThreshold, 1, 2, 2}, 10));
  // b^3 a b^3 and b^3 a b^3 a b^3 share every 4-window statistic.
  CHECK_FALSE(brute::constant_on_classes(two, {LanguageClass::kTestable, 4, 1, 2}, 11));

  auto contains = fixtures::acceptor("contains_a.tg");
  CHECK(decide_exact(contains, {LanguageClass::kTestable, 1, 1, 2}));
  CHECK(decide_exact(contains, {LanguageClass::kPiecewise, 1, 1, 2}));
  CHECK(decide_exact(fixtures::acceptor("a_then_b.tg"), {LanguageClass::kPiecewise, 2, 1, 2}));
  CHECK_FALSE(decide_exact(fixtures::acceptor("a_then_b.tg"), {LanguageClass::kPiecewise, 1, 1, 2}));
}

TEST_CASE("decide_exact refuses past the scanner cap", "[oracle]") {
  auto a = fixtures::acceptor("ab_plus.tg");
  try {
    decide_exact(a, {LanguageClass::kTestable, 3, 1, 2}, Limits{.scanner_cap = 10});
    FAIL("expected a refusal");
  } catch (const CapExceeded& e) {
    CHECK(e.cap() == 10);
  }
}

TEST_CASE("decide_exact ignores the empty word", "[oracle]") {
  // Same as the all-words acceptor except that the initial state rejects.
  auto a = fixtures::make(2, 1, {1, 1}, 0, {1});
  CHECK(decide_exact(a, {LanguageClass::kStrongly, 1, 1, 1}));
  auto stripped = without_empty_word(fixtures::acceptor("loop1.tg"));
  CHECK_FALSE(stripped.is_final(stripped.initial));
  CHECK(same_language(stripped, fixtures::acceptor("loop1.tg"), 6));
}

TEST_CASE("minimize_dfa", "[oracle]") {
  auto ab = fixtures::acceptor("ab_plus.tg");
  auto m = minimize_dfa(ab);
  CHECK(m.graph.node_count() == ab.graph.node_count());
  CHECK(m.finals.size() == 1);
  CHECK(same_language(ab, m, 8));
  CHECK(minimize_dfa(m).graph == m.graph);

  // Node 2 duplicates node 1.
  auto dup = fixtures::make(3, 1, {1, 2, 1}, 0, {1, 2});
  auto merged = minimize_dfa(dup);
  CHECK(merged.graph.node_count() == 2);
  CHECK(same_language(dup, merged, 8));

  // Unreachable nodes vanish and a sink completes partial graphs.
  TransitionGraph partial(3, 2);
  partial.set(0, 0, 1);
  partial.set(1, 1, 0);
  partial.set(2, 0, 2);
  auto completed = minimize_dfa(make_acceptor(partial, 0, {1}));
  CHECK(completed.graph.is_complete());
  CHECK(completed.graph.node_count() == 3);
}

TEST_CASE("minimization preserves oracle verdicts", "[oracle][property]") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    TransitionGraph g(6, 2);
    for (Node p = 0; p < 6; ++p)
      for (Letter a = 0; a < 2; ++a) g.set(p, a, static_cast<Node>(rng() % 6));
    std::vector<Node> finals;
    for (Node p = 0; p < 6; ++p)
      if (rng() % 2) finals.push_back(p);
    auto raw = make_acceptor(g, 0, finals);
    auto m = minimize_dfa(raw);
    CHECK(same_language(raw, m, 8));
    for (auto cls : kAllClasses) {
      for (std::size_t k : {1, 2}) {
        const ScanParams params{cls, k, 2, 2};
        CHECK(decide_exact(raw, params).holds == decide_exact(m, params).holds);
      }
    }
  }
}

TEST_CASE("reverse_dfa accepts the mirror language", "[oracle][property]") {
  for (const auto& a : random_corpus(41, 60, 5, 2)) {
    auto r = reverse_dfa(a);
    for (const auto& word : brute::words(a.graph.letter_count(), 7)) {
      std::vector<Letter> back(word.rbegin(), word.rend());
      CHECK(a.accepts(word) == r.accepts(back));
    }
    for (std::size_t k : {1, 2}) {
      CHECK(decide_exact(a, {LanguageClass::kLeft, k, 1, 2}).holds ==
            decide_exact(r, {LanguageClass::kRight, k, 1, 2}).holds);
    }
  }
}

TEST_CASE("random_corpus is deterministic per seed", "[oracle]") {
  auto serial = [](const std::vector<AcceptorDfa>& c) {
    std::vector<std::string> out;
    for (const auto& a : c) out.push_back(a.serialize());
    return out;
  };
  CHECK(serial(random_corpus(3, 3, 5, 2)) == serial(random_corpus(3, 3, 5, 2)));
  CHECK(serial(random_corpus(3, 20, 5, 2)) != serial(random_corpus(4, 20, 5, 2)));

  for (const auto& a : random_corpus(5, 50, 1, 2)) {
    CHECK(a.graph.node_count() == 1);
  }
  for (const auto& a : random_corpus(6, 100, 6, 3)) {
    CHECK(a.graph.is_complete());
    CHECK(a.graph.node_count() <= 6);
    CHECK(minimize_dfa(a).graph == a.graph);
    auto again = parse_graph_file(a.serialize());
    CHECK(again.graph == a.graph);
  }
  CHECK_THROWS_AS(random_corpus(1, 1, 0, 2), InvalidInput);
}
