#include "ltest/oracle.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "ltest/error.hpp"

namespace ltest {

bool AcceptorDfa::is_final(Node p) const noexcept { return std::binary_search(finals.begin(), finals.end(), p); }

bool AcceptorDfa::accepts(std::span<const Letter> word) const noexcept {
  Node p = graph.run(initial, word);
  return p != kUndefined && is_final(p);
}

std::string AcceptorDfa::serialize() const { return serialize_graph(graph, initial, finals, true); }

AcceptorDfa make_acceptor(TransitionGraph graph, Node initial, std::vector<Node> finals) {
  if (initial >= graph.node_count()) throw InvalidInput("initial state out of range");
  std::sort(finals.begin(), finals.end());
  finals.erase(std::unique(finals.begin(), finals.end()), finals.end());
  if (!finals.empty() && finals.back() >= graph.node_count()) throw InvalidInput("final state out of range");
  return AcceptorDfa{std::move(graph), initial, std::move(finals)};
}

namespace {

AcceptorDfa completed(const AcceptorDfa& a) {
  if (a.graph.is_complete()) return a;
  return AcceptorDfa{complete_with_sink(a.graph), a.initial, a.finals};
}

std::vector<Letter> reversed(std::vector<Letter> w) {
  std::reverse(w.begin(), w.end());
  return w;
}

}  // namespace

Verdict decide_exact(const AcceptorDfa& input, const ScanParams& params, const Limits& limits) {
  const std::string property = to_string(params.cls) + " k=" + std::to_string(params.k) +
                               (params.cls == LanguageClass::kThreshold ? " l=" + std::to_string(params.l) : "");
  if (params.cls == LanguageClass::kLeft) {
    // Left signatures of w are right signatures of the reversed word.
    ScanParams right = params;
    right.cls = LanguageClass::kRight;
    auto v = decide_exact(reverse_dfa(input, limits), right, limits);
    v.property = property;
    if (v.witness) {
      for (auto& w : v.witness->words) w = reversed(std::move(w));
    }
    return v;
  }

  const AcceptorDfa a = completed(input);
  ScanParams p = params;
  p.alphabet = a.graph.letter_count();
  Scanner scanner(p);
  const std::size_t g = p.alphabet;

  std::unordered_map<std::string, std::uint32_t> scanner_ids;
  std::vector<const std::string*> scanner_states;
  std::vector<std::uint32_t> scanner_signature;
  std::unordered_map<std::string, std::uint32_t> signature_ids;
  // Per signature: a product node reached while accepting, one while rejecting.
  constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);
  std::vector<std::array<std::uint32_t, 2>> seen_by_signature;

  auto intern = [&](std::string s) -> std::uint32_t {
    auto [it, fresh] = scanner_ids.try_emplace(std::move(s), static_cast<std::uint32_t>(scanner_states.size()));
    if (fresh) {
      if (scanner_states.size() >= limits.scanner_cap) {
        throw CapExceeded("scanner state space too large", scanner_states.size(), limits.scanner_cap);
      }
      scanner_states.push_back(&it->first);
      auto key = scanner.signature(it->first).key();
      auto [sit, sfresh] = signature_ids.try_emplace(std::move(key), static_cast<std::uint32_t>(signature_ids.size()));
      if (sfresh) seen_by_signature.push_back({kNone, kNone});
      scanner_signature.push_back(sit->second);
    }
    return it->second;
  };

  struct ProductNode {
    Node state;
    std::uint32_t scanner;
    std::uint32_t parent;
    Letter letter;
  };
  std::vector<ProductNode> nodes;
  std::unordered_map<std::uint64_t, std::uint32_t> node_ids;
  auto visit = [&](Node q, std::uint32_t s, std::uint32_t parent, Letter letter) {
    const std::uint64_t key = static_cast<std::uint64_t>(s) * a.graph.node_count() + q;
    if (node_ids.try_emplace(key, static_cast<std::uint32_t>(nodes.size())).second) {
      nodes.push_back({q, s, parent, letter});
    }
  };
  auto word_of = [&](std::uint32_t id) {
    std::vector<Letter> w;
    for (; id != kNone; id = nodes[id].parent) w.push_back(nodes[id].letter);
    return reversed(std::move(w));
  };

  for (Letter c = 0; c < g; ++c) visit(a.graph.target(a.initial, c), intern(scanner.start(c)), kNone, c);
  std::vector<std::uint32_t> scanner_next;  // scanner transitions, filled on demand
  for (std::uint32_t head = 0; head < nodes.size(); ++head) {
    const auto [q, s, parent, letter] = nodes[head];
    auto& seen = seen_by_signature[scanner_signature[s]];
    const int side = a.is_final(q) ? 1 : 0;
    if (seen[side] == kNone) seen[side] = head;
    if (seen[1 - side] != kNone) {
      Witness w;
      w.condition = "equal signatures, different membership";
      w.words = {word_of(seen[1]), word_of(seen[0])};
      w.description = "first word accepted, second rejected";
      return Verdict::fail(property, std::move(w));
    }
    if (scanner_next.size() < scanner_states.size() * g) scanner_next.resize(scanner_states.size() * g, kNone);
    for (Letter c = 0; c < g; ++c) {
      auto& next = scanner_next[s * g + c];
      if (next == kNone) next = intern(scanner.step(*scanner_states[s], c));
      visit(a.graph.target(q, c), next, head, c);
    }
  }
  return Verdict::pass(property, std::to_string(scanner_states.size()) + " scanner states, " +
                                     std::to_string(nodes.size()) + " product states");
}

AcceptorDfa minimize_dfa(const AcceptorDfa& input) {
  const AcceptorDfa a = completed(input);
  const std::size_t g = a.graph.letter_count();

  // Reachable states from the initial one.
  std::vector<Node> reach{a.initial};
  std::vector<bool> seen(a.graph.node_count(), false);
  seen[a.initial] = true;
  for (std::size_t h = 0; h < reach.size(); ++h) {
    for (Letter c = 0; c < g; ++c) {
      Node q = a.graph.target(reach[h], c);
      if (!seen[q]) {
        seen[q] = true;
        reach.push_back(q);
      }
    }
  }

  // Moore refinement over reachable states.
  std::vector<std::uint32_t> block(a.graph.node_count(), 0);
  for (Node p : reach) block[p] = a.is_final(p) ? 1 : 0;
  std::size_t blocks = 0;
  while (true) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> signature;
    std::vector<std::uint32_t> next(a.graph.node_count(), 0);
    for (Node p : reach) {
      std::vector<std::uint32_t> key{block[p]};
      for (Letter c = 0; c < g; ++c) key.push_back(block[a.graph.target(p, c)]);
      auto [it, fresh] = signature.try_emplace(std::move(key), static_cast<std::uint32_t>(signature.size()));
      next[p] = it->second;
    }
    const bool stable = signature.size() == blocks;
    blocks = signature.size();
    block = std::move(next);
    if (stable) break;
  }

  // Renumber blocks breadth-first from the initial state.
  constexpr Node kUnset = kUndefined;
  std::vector<Node> number(blocks, kUnset);
  std::vector<Node> representative;
  number[block[a.initial]] = 0;
  representative.push_back(a.initial);
  for (std::size_t h = 0; h < representative.size(); ++h) {
    for (Letter c = 0; c < g; ++c) {
      Node q = a.graph.target(representative[h], c);
      if (number[block[q]] == kUnset) {
        number[block[q]] = static_cast<Node>(representative.size());
        representative.push_back(q);
      }
    }
  }
  TransitionGraph out(representative.size(), g);
  std::vector<Node> finals;
  for (Node i = 0; i < representative.size(); ++i) {
    for (Letter c = 0; c < g; ++c) out.set(i, c, number[block[a.graph.target(representative[i], c)]]);
    if (a.is_final(representative[i])) finals.push_back(i);
  }
  return AcceptorDfa{std::move(out), 0, std::move(finals)};
}

AcceptorDfa without_empty_word(const AcceptorDfa& a) {
  const std::size_t n = a.graph.node_count();
  const std::size_t g = a.graph.letter_count();
  TransitionGraph out(n + 1, g);
  for (Node p = 0; p < n; ++p) {
    for (Letter c = 0; c < g; ++c) out.set(p, c, a.graph.target(p, c));
  }
  for (Letter c = 0; c < g; ++c) out.set(static_cast<Node>(n), c, a.graph.target(a.initial, c));
  return AcceptorDfa{std::move(out), static_cast<Node>(n), a.finals};
}

AcceptorDfa reverse_dfa(const AcceptorDfa& input, const Limits& limits) {
  const AcceptorDfa a = completed(input);
  const std::size_t n = a.graph.node_count();
  const std::size_t g = a.graph.letter_count();

  // Subset construction on the reversed edges; a subset is the set of states
  // from which the word read so far (backwards) leads into a final state.
  std::map<std::vector<bool>, Node> ids;
  std::vector<std::vector<bool>> subsets;
  auto intern = [&](std::vector<bool> s) {
    auto [it, fresh] = ids.try_emplace(std::move(s), static_cast<Node>(subsets.size()));
    if (fresh) {
      if (subsets.size() >= limits.determinize_cap) {
        throw CapExceeded("reversed automaton too large", subsets.size(), limits.determinize_cap);
      }
      subsets.push_back(it->first);
    }
    return it->second;
  };
  std::vector<bool> start(n, false);
  for (Node f : a.finals) start[f] = true;
  intern(start);
  std::vector<Node> edges;
  for (std::size_t h = 0; h < subsets.size(); ++h) {
    for (Letter c = 0; c < g; ++c) {
      std::vector<bool> next(n, false);
      for (Node p = 0; p < n; ++p) next[p] = subsets[h][a.graph.target(p, c)];
      edges.push_back(intern(std::move(next)));
    }
  }
  TransitionGraph out(subsets.size(), g);
  std::vector<Node> finals;
  for (Node i = 0; i < subsets.size(); ++i) {
    for (Letter c = 0; c < g; ++c) out.set(i, c, edges[i * g + c]);
    if (subsets[i][a.initial]) finals.push_back(i);
  }
  return minimize_dfa(AcceptorDfa{std::move(out), 0, std::move(finals)});
}

}  // namespace ltest
