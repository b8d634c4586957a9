#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ltest/limits.hpp"

namespace ltest {

using Element = std::uint32_t;

// A finite semigroup given by its right Cayley graph. Elements 0..g-1 are the
// generators; the full multiplication table is derived from the Cayley rows
// and always materialized.
class FiniteSemigroup {
 public:
  enum class Validate { kYes, kNo };

  FiniteSemigroup() = default;

  // `rows[x * g + j]` is x times generator j. Throws InvalidInput when an
  // entry leaves the element list ("not closed"), when some element is not a
  // product of generators, or when Light's test finds a non-associative
  // triple. Throws CapExceeded when n is above limits.semigroup_cap.
  static FiniteSemigroup from_cayley(std::size_t n, std::size_t g, std::vector<Element> rows,
                                     Validate validate = Validate::kYes, const Limits& limits = {});

  std::size_t size() const noexcept { return n_; }
  std::size_t generator_count() const noexcept { return g_; }

  Element right(Element x, std::size_t generator) const noexcept { return rows_[x * g_ + generator]; }
  Element product(Element x, Element y) const noexcept { return table_[x * n_ + y]; }
  Element product(std::initializer_list<Element> xs) const noexcept;

  std::span<const Element> cayley_rows() const noexcept { return rows_; }
  std::span<const Element> table() const noexcept { return table_; }

  // A shortest word over the generators evaluating to x.
  std::vector<std::uint32_t> word(Element x) const;

  const std::vector<std::string>& names() const noexcept { return names_; }
  void set_names(std::vector<std::string> names);
  std::string name(Element x) const;

 private:
  std::size_t n_ = 0;
  std::size_t g_ = 0;
  std::vector<Element> rows_;
  std::vector<Element> table_;
  std::vector<Element> parent_;        // element this one extends by one generator
  std::vector<std::uint32_t> last_;    // that generator
  std::vector<std::string> names_;
};

FiniteSemigroup parse_semigroup(std::string_view text, const Limits& limits = {});
std::string serialize_semigroup(const FiniteSemigroup& s);

struct AssociativityViolation {
  Element a;
  Element generator;
  Element b;
};

// Checks (a j) b = a (j b) for all elements a, b and every generator j. When
// every element is a left-normed product of the generators this certifies
// associativity in O(n^2 g).
std::optional<AssociativityViolation> light_associativity_test(std::size_t n, std::span<const Element> table,
                                                               std::span<const Element> generators);

std::vector<Element> idempotents(const FiniteSemigroup& s);
bool is_idempotent(const FiniteSemigroup& s, Element x) noexcept;

// The unique idempotent among x, x^2, x^3, ...
Element omega_power(const FiniteSemigroup& s, Element x);

// S^m as a sorted element list.
std::vector<Element> power_ideal(const FiniteSemigroup& s, std::size_t m);

struct PowerChain {
  // powers[i] is S^(i+1); the last entry is the stable ideal.
  std::vector<std::vector<Element>> powers;
  // Least m with S^(m+1) = S^m.
  std::size_t stabilization_index = 1;
};

PowerChain power_chain(const FiniteSemigroup& s);

// Direct product. Generators are the pairs (s, h) and (h', s) with h, h'
// generators of the factors: n1*g2 + n2*g1 - g1*g2 of them, listed first.
// Pair (x, y) outside the generator block follows in lexicographic order.
FiniteSemigroup product_semigroups(const FiniteSemigroup& s1, const FiniteSemigroup& s2,
                                   const Limits& limits = {});

// Components of element i of a product: {i / n2, i % n2} under the
// lexicographic numbering, translated through this map.
std::vector<std::pair<Element, Element>> product_pairs(const FiniteSemigroup& s1, const FiniteSemigroup& s2);

// <a, b | aba = a, bab = b, a^2 = a, b^2 = 0> = {a, b, ab, ba, 0}.
FiniteSemigroup make_a2();

// A2 x A2 x ... (m factors).
FiniteSemigroup a2_power(std::size_t m, const Limits& limits = {});

}  // namespace ltest
