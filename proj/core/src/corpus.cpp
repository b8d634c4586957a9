#include <random>

#include "ltest/error.hpp"
#include "ltest/oracle.hpp"

namespace ltest {

namespace {

enum class Family { kUniform, kMonotone, kReset, kIdempotent, kNearMonotone, kWindow, kLetterSet };
constexpr std::size_t kFamilies = 7;

// Raw `rng() % n` keeps sequences identical across standard libraries.
struct Draw {
  std::mt19937_64 rng;
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng() % n); }
  bool coin() { return rng() % 2 == 0; }
};

// Uniform automata get at most this many states so that their transition
// semigroups stay small.
constexpr std::size_t kUniformStates = 4;

AcceptorDfa draw_once(Draw& d, std::size_t max_states, std::size_t max_letters, std::size_t& raw_states) {
  // One-letter alphabets are drawn rarely.
  const std::size_t g = max_letters == 1 || d.below(10) == 0 ? 1 + d.below(max_letters) : 2 + d.below(max_letters - 1);
  auto family = static_cast<Family>(d.below(kFamilies));
  if (family == Family::kWindow && g + 1 > max_states) family = Family::kMonotone;
  if (family == Family::kLetterSet && (g > 3 || (std::size_t{1} << g) > max_states)) family = Family::kMonotone;
  // Mostly from the upper half of the allowed range.
  const std::size_t top = family == Family::kUniform ? std::min(max_states, kUniformStates) : max_states;
  const std::size_t low = (top + 1) / 2;
  std::size_t n = d.below(10) == 0 ? 1 + d.below(top) : low + d.below(top - low + 1);
  if (family == Family::kWindow) n = g + 1;
  if (family == Family::kLetterSet) n = std::size_t{1} << g;

  raw_states = n;
  TransitionGraph graph(n, g);
  switch (family) {
    case Family::kUniform:
      for (Node p = 0; p < n; ++p)
        for (Letter c = 0; c < g; ++c) graph.set(p, c, static_cast<Node>(d.below(n)));
      break;
    case Family::kMonotone:
    case Family::kNearMonotone:
      for (Node p = 0; p < n; ++p)
        for (Letter c = 0; c < g; ++c) graph.set(p, c, static_cast<Node>(p + d.below(n - p)));
      if (family == Family::kNearMonotone) {
        const Node p = static_cast<Node>(d.below(n));
        graph.set(p, static_cast<Letter>(d.below(g)), static_cast<Node>(d.below(p + 1)));
      }
      break;
    case Family::kReset:
      for (Letter c = 0; c < g; ++c) {
        const bool reset = d.coin();
        const Node to = static_cast<Node>(d.below(n));
        for (Node p = 0; p < n; ++p) graph.set(p, c, reset ? to : static_cast<Node>(d.below(n)));
      }
      break;
    case Family::kIdempotent:
      for (Letter c = 0; c < g; ++c) {
        std::vector<Node> fixed;
        for (Node p = 0; p < n; ++p) {
          if (d.coin()) fixed.push_back(p);
        }
        if (fixed.empty()) fixed.push_back(static_cast<Node>(d.below(n)));
        for (Node p = 0; p < n; ++p) graph.set(p, c, fixed[d.below(fixed.size())]);
        for (Node p : fixed) graph.set(p, c, p);
      }
      break;
    case Family::kWindow:
      // State 0 is the start, state c + 1 remembers the last letter c.
      for (Node p = 0; p < n; ++p)
        for (Letter c = 0; c < g; ++c) graph.set(p, c, c + 1);
      break;
    case Family::kLetterSet:
      // State = set of letters read so far.
      for (Node p = 0; p < n; ++p)
        for (Letter c = 0; c < g; ++c) graph.set(p, c, p | (Node{1} << c));
      break;
  }
  std::vector<Node> finals;
  for (Node p = 0; p < n; ++p) {
    if (d.coin()) finals.push_back(p);
  }
  return minimize_dfa(make_acceptor(std::move(graph), 0, std::move(finals)));
}

// Redraws automata that lose states to
// minimization; a bounded number of attempts keeps the sequence finite.
AcceptorDfa draw(Draw& d, std::size_t max_states, std::size_t max_letters) {
  constexpr int kAttempts = 64;
  for (int i = 1;; ++i) {
    std::size_t raw = 0;
    auto a = draw_once(d, max_states, max_letters, raw);
    if (a.graph.node_count() >= raw || i == kAttempts) return a;
  }
}

}  // namespace

std::vector<AcceptorDfa> random_corpus(std::uint64_t seed, std::size_t count, std::size_t max_states,
                                       std::size_t max_letters) {
  if (max_states == 0 || max_letters == 0) throw InvalidInput("corpus bounds must be positive");
  Draw d{std::mt19937_64(seed)};
  std::vector<AcceptorDfa> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(draw(d, max_states, max_letters));
  return out;
}

}  // namespace ltest
