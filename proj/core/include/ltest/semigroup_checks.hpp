#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ltest/semigroup.hpp"
#include "ltest/verdict.hpp"

namespace ltest {

// Products x*S*y and friends as sorted, duplicate-free element lists.
std::vector<Element> sandwich(const FiniteSemigroup& s, Element left, Element right);  // left S right
std::vector<Element> left_ideal_of(const FiniteSemigroup& s, Element e);              // S e
std::vector<Element> right_ideal_of(const FiniteSemigroup& s, Element e);             // e S
std::vector<Element> two_sided_ideal_of(const FiniteSemigroup& s, Element e);         // S e S

// A subsemigroup eSe (or eSf) together with the idempotents that cut it out.
struct LocalSubsemigroup {
  Element e;
  std::optional<Element> f;
  std::vector<Element> elements;
};

LocalSubsemigroup local_subsemigroup(const FiniteSemigroup& s, Element e);

Verdict is_aperiodic(const FiniteSemigroup& s);

// Identities on a subsemigroup T. Both throw InvalidInput when T is not
// closed under the product.
//   1-testable: commutative and idempotent.
//   2-testable: xyx = xyxyx, x^2 = x^3, xyxzx = xzxyx.
bool is_1_testable(const FiniteSemigroup& s, std::span<const Element> t);
bool is_2_testable(const FiniteSemigroup& s, std::span<const Element> t);

// The four equivalent forms of local testability, evaluated independently.
// A form is nullopt when its evaluation was skipped for exceeding `budget`
// products.
struct LocalTestabilityForms {
  bool local_1_testable;                  // eSe commutative and idempotent
  std::optional<bool> left_ideal_2_testable;   // every Se
  std::optional<bool> right_ideal_2_testable;  // every eS
  std::optional<bool> two_sided_2_testable;    // every SeS
};

inline constexpr std::size_t kDefaultCrossCheckBudget = 400'000'000;

LocalTestabilityForms local_testability_forms(const FiniteSemigroup& s,
                                              std::size_t budget = kDefaultCrossCheckBudget);

// eSe commutative and idempotent for every idempotent e. The equivalent
// ideal forms are evaluated as a cross-check; disagreement throws
// InternalInconsistency.
Verdict check_local_testability_semigroup(const FiniteSemigroup& s,
                                          std::size_t budget = kDefaultCrossCheckBudget);

// Sound lower bound on the order of local testability. nullopt when S is
// not locally testable.
std::optional<std::size_t> order_lower_bound_semigroup(const FiniteSemigroup& s);

// Aperiodic and x u y = y u x for all idempotents e, f, all x, y in eSf and
// all u in S.
Verdict check_threshold_lt_semigroup(const FiniteSemigroup& s);

// Aperiodic and (xy)^w x = y (xy)^w = (xy)^w for all x, y.
Verdict simon_identities(const FiniteSemigroup& s);

// Distinct elements generate distinct principal ideals S1 x S1.
Verdict is_j_trivial(const FiniteSemigroup& s);

// Simon identities, cross-checked against J-triviality.
Verdict check_piecewise_semigroup(const FiniteSemigroup& s);

// (ese)^2 = ese for every idempotent e and every s.
Verdict check_local_idempotency_semigroup(const FiniteSemigroup& s);

enum class LocalIdentity {
  kXyxIsXy,  // xyx = xy
  kXyxIsYx,  // xyx = yx
};

// Locally idempotent and every eSe satisfies `identity`.
Verdict locally_idempotent_with(const FiniteSemigroup& s, LocalIdentity identity);

// Left: eSe satisfies xyx = yx. Right: eSe satisfies xyx = xy.
inline constexpr LocalIdentity kLeftLocalIdentity = LocalIdentity::kXyxIsYx;
inline constexpr LocalIdentity kRightLocalIdentity = LocalIdentity::kXyxIsXy;

Verdict check_left_lt_semigroup(const FiniteSemigroup& s);
Verdict check_right_lt_semigroup(const FiniteSemigroup& s);

}  // namespace ltest
