#include "ltest/bridge.hpp"

#include <boost/container_hash/hash.hpp>
#include <unordered_map>

#include "ltest/error.hpp"

namespace ltest {

Transformation Transformation::then(const Transformation& next) const {
  Transformation out{std::vector<Node>(image.size())};
  for (std::size_t p = 0; p < image.size(); ++p) out.image[p] = next.image[image[p]];
  return out;
}

namespace {
struct ImageHash {
  std::size_t operator()(const std::vector<Node>& v) const noexcept {
    return boost::hash_range(v.begin(), v.end());
  }
};
}  // namespace

TransitionSemigroup transition_semigroup(const TransitionGraph& g, const Limits& limits) {
  if (!g.is_complete()) throw InvalidInput("transition semigroup requires a complete graph");
  const std::size_t nodes = g.node_count();
  const std::size_t letters = g.letter_count();

  TransitionSemigroup out;
  std::unordered_map<std::vector<Node>, Element, ImageHash> index;

  auto intern = [&](std::vector<Node> image, std::vector<Letter> witness) -> std::pair<Element, bool> {
    auto [it, inserted] = index.try_emplace(std::move(image), static_cast<Element>(out.elements.size()));
    if (inserted) {
      if (out.elements.size() >= limits.semigroup_cap) {
        throw CapExceeded("transition semigroup too large", out.elements.size(), limits.semigroup_cap);
      }
      out.elements.push_back(Transformation{it->first});
      out.witnesses.push_back(std::move(witness));
    }
    return {it->second, inserted};
  };

  // Letter maps, pairwise deduplicated.
  out.generator_of_letter.resize(letters);
  for (Letter a = 0; a < letters; ++a) {
    std::vector<Node> image(nodes);
    for (Node p = 0; p < nodes; ++p) image[p] = g.target(p, a);
    auto [id, fresh] = intern(std::move(image), {a});
    out.generator_of_letter[a] = id;
    if (fresh) out.letter_of_generator.push_back(a);
  }
  const std::size_t gens = out.letter_of_generator.size();

  std::vector<Element> rows;
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    for (std::size_t j = 0; j < gens; ++j) {
      const Letter a = out.letter_of_generator[j];
      std::vector<Node> image(nodes);
      const auto& from = out.elements[head].image;
      for (Node p = 0; p < nodes; ++p) image[p] = g.target(from[p], a);
      auto witness = out.witnesses[head];
      witness.push_back(a);
      auto [id, fresh] = intern(std::move(image), std::move(witness));
      (void)fresh;
      rows.push_back(id);
    }
  }
  out.semigroup = FiniteSemigroup::from_cayley(out.elements.size(), gens, std::move(rows),
                                               FiniteSemigroup::Validate::kNo, limits);
  return out;
}

}  // namespace ltest
