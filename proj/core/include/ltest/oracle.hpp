#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ltest/graph.hpp"
#include "ltest/limits.hpp"
#include "ltest/scanner.hpp"
#include "ltest/verdict.hpp"

namespace ltest {

// A graph together with an initial state and final states: the language the
// decision procedures speak about. Words are nonempty throughout.
struct AcceptorDfa {
  TransitionGraph graph;
  Node initial = 0;
  std::vector<Node> finals;  // sorted, unique

  bool is_final(Node p) const noexcept;
  // False when the run falls off a partial graph.
  bool accepts(std::span<const Letter> word) const noexcept;
  std::string serialize() const;
};

AcceptorDfa make_acceptor(TransitionGraph graph, Node initial, std::vector<Node> finals);

// Exact class membership of L(A) minus the empty word: false iff two words
// with the same signature differ on membership. The witness carries two such
// words, each shortest for its product state.
Verdict decide_exact(const AcceptorDfa& a, const ScanParams& params, const Limits& limits = {});

// Minimal complete acceptor of the same language: unreachable states dropped,
// a sink added if needed, equivalent states merged, states renumbered in
// breadth-first order from the initial state.
AcceptorDfa minimize_dfa(const AcceptorDfa& a);

// Same language minus the empty word: a fresh non-final initial state copies
// the row of the old one.
AcceptorDfa without_empty_word(const AcceptorDfa& a);

// Minimal acceptor of the reversed language (nonempty words).
AcceptorDfa reverse_dfa(const AcceptorDfa& a, const Limits& limits = {});

// Seeded corpus of minimal complete acceptors drawn from a mix of families
// (uniform, monotone, reset-heavy, idempotent-letter, near-monotone).
std::vector<AcceptorDfa> random_corpus(std::uint64_t seed, std::size_t count, std::size_t max_states,
                                       std::size_t max_letters);

}  // namespace ltest
