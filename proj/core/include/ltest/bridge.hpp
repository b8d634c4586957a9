#pragma once

#include <optional>
#include <vector>

#include "ltest/graph.hpp"
#include "ltest/limits.hpp"
#include "ltest/semigroup.hpp"

namespace ltest {

// A total map nodes -> nodes; the action of a semigroup element on a graph.
struct Transformation {
  std::vector<Node> image;

  Node operator()(Node p) const noexcept { return image[p]; }
  // First this, then `next` (right action: p.(xy) = (p.x).y).
  Transformation then(const Transformation& next) const;
  bool operator==(const Transformation&) const = default;
};

struct TransitionSemigroup {
  FiniteSemigroup semigroup;
  // Per element: its transformation and one shortest word inducing it.
  std::vector<Transformation> elements;
  std::vector<std::vector<Letter>> witnesses;
  // Per letter: the generator inducing the same transformation.
  std::vector<Element> generator_of_letter;
  // Per generator: the first letter inducing it.
  std::vector<Letter> letter_of_generator;
};

// Semigroup of transformations induced by nonempty words. Letters inducing
// the same map collapse into one generator; generators come first, then the
// remaining elements in breadth-first discovery order. Requires a complete
// graph; throws CapExceeded past limits.semigroup_cap with the partial count.
TransitionSemigroup transition_semigroup(const TransitionGraph& g, const Limits& limits = {});

}  // namespace ltest
