#include "ltest/semigroup_checks.hpp"

#include <algorithm>

#include "ltest/detail/tarjan.hpp"
#include "ltest/error.hpp"

namespace ltest {

namespace {

std::vector<Element> collect(const FiniteSemigroup& s, const std::vector<char>& mark) {
  std::vector<Element> out;
  for (Element x = 0; x < s.size(); ++x) {
    if (mark[x]) out.push_back(x);
  }
  return out;
}

// Work counter shared by the identity checks; nullopt results mean the
// budget ran out before an answer.
struct Budget {
  std::size_t left;
  bool spend(std::size_t n) {
    if (n > left) {
      left = 0;
      return false;
    }
    left -= n;
    return true;
  }
};

void require_closed(const FiniteSemigroup& s, std::span<const Element> t) {
  std::vector<char> in(s.size(), 0);
  for (Element x : t) in[x] = 1;
  for (Element x : t) {
    for (Element y : t) {
      if (!in[s.product(x, y)]) {
        throw InvalidInput("element set is not closed: " + std::to_string(x) + " * " + std::to_string(y) +
                           " = " + std::to_string(s.product(x, y)) + " is outside it");
      }
    }
  }
}

std::optional<bool> two_testable(const FiniteSemigroup& s, std::span<const Element> t, Budget& budget) {
  if (!budget.spend(t.size() * (t.size() + 1))) return std::nullopt;
  for (Element x : t) {
    const Element xx = s.product(x, x);
    if (xx != s.product(xx, x)) return false;
  }
  for (Element x : t) {
    for (Element y : t) {
      const Element xyx = s.product({x, y, x});
      if (xyx != s.product({xyx, y, x})) return false;
    }
  }
  // xyxzx = xzxyx: with a = xy and b = xz this is abx = bax over a, b in xT.
  std::vector<char> seen(s.size(), 0);
  std::vector<Element> row;
  for (Element x : t) {
    row.clear();
    for (Element y : t) {
      const Element a = s.product(x, y);
      if (!seen[a]) {
        seen[a] = 1;
        row.push_back(a);
      }
    }
    for (Element a : row) seen[a] = 0;
    if (!budget.spend(row.size() * row.size())) return std::nullopt;
    for (std::size_t i = 0; i < row.size(); ++i) {
      for (std::size_t j = i + 1; j < row.size(); ++j) {
        if (s.product({row[i], row[j], x}) != s.product({row[j], row[i], x})) return false;
      }
    }
  }
  return true;
}

// Every ideal produced by `make(e)` for idempotent e is 2-testable.
template <class Make>
std::optional<bool> all_2_testable(const FiniteSemigroup& s, const std::vector<Element>& idem, Make make,
                                   Budget budget) {
  for (Element e : idem) {
    auto t = make(e);
    auto r = two_testable(s, t, budget);
    if (!r) return std::nullopt;
    if (!*r) return false;
  }
  return true;
}

Witness elements_witness(std::string condition, std::vector<Element> xs, std::string description) {
  Witness w;
  w.condition = std::move(condition);
  w.elements = std::move(xs);
  w.description = std::move(description);
  return w;
}

}  // namespace

std::vector<Element> sandwich(const FiniteSemigroup& s, Element left, Element right) {
  std::vector<char> mark(s.size(), 0);
  for (Element x = 0; x < s.size(); ++x) mark[s.product({left, x, right})] = 1;
  return collect(s, mark);
}

std::vector<Element> left_ideal_of(const FiniteSemigroup& s, Element e) {
  std::vector<char> mark(s.size(), 0);
  for (Element x = 0; x < s.size(); ++x) mark[s.product(x, e)] = 1;
  return collect(s, mark);
}

std::vector<Element> right_ideal_of(const FiniteSemigroup& s, Element e) {
  std::vector<char> mark(s.size(), 0);
  for (Element x = 0; x < s.size(); ++x) mark[s.product(e, x)] = 1;
  return collect(s, mark);
}

std::vector<Element> two_sided_ideal_of(const FiniteSemigroup& s, Element e) {
  std::vector<char> mark(s.size(), 0);
  for (Element u : left_ideal_of(s, e)) {
    for (Element x = 0; x < s.size(); ++x) mark[s.product(u, x)] = 1;
  }
  return collect(s, mark);
}

LocalSubsemigroup local_subsemigroup(const FiniteSemigroup& s, Element e) {
  return LocalSubsemigroup{e, std::nullopt, sandwich(s, e, e)};
}

Verdict is_aperiodic(const FiniteSemigroup& s) {
  for (Element x = 0; x < s.size(); ++x) {
    const Element w = omega_power(s, x);
    if (s.product(w, x) != w) {
      return Verdict::fail("aperiodic",
                           elements_witness("x^w x = x^w", {x, w}, "x^w * x != x^w: x lies in a nontrivial group"));
    }
  }
  return Verdict::pass("aperiodic");
}

bool is_1_testable(const FiniteSemigroup& s, std::span<const Element> t) {
  require_closed(s, t);
  for (Element x : t) {
    if (!is_idempotent(s, x)) return false;
  }
  for (Element x : t) {
    for (Element y : t) {
      if (s.product(x, y) != s.product(y, x)) return false;
    }
  }
  return true;
}

bool is_2_testable(const FiniteSemigroup& s, std::span<const Element> t) {
  require_closed(s, t);
  Budget unlimited{static_cast<std::size_t>(-1)};
  return *two_testable(s, t, unlimited);
}

LocalTestabilityForms local_testability_forms(const FiniteSemigroup& s, std::size_t budget) {
  const auto idem = idempotents(s);
  LocalTestabilityForms out{};
  out.local_1_testable = std::all_of(idem.begin(), idem.end(), [&](Element e) {
    auto t = sandwich(s, e, e);
    return is_1_testable(s, t);
  });
  out.left_ideal_2_testable =
      all_2_testable(s, idem, [&](Element e) { return left_ideal_of(s, e); }, Budget{budget});
  out.right_ideal_2_testable =
      all_2_testable(s, idem, [&](Element e) { return right_ideal_of(s, e); }, Budget{budget});
  out.two_sided_2_testable =
      all_2_testable(s, idem, [&](Element e) { return two_sided_ideal_of(s, e); }, Budget{budget});
  return out;
}

Verdict check_local_testability_semigroup(const FiniteSemigroup& s, std::size_t budget) {
  const auto forms = local_testability_forms(s, budget);
  std::string notes;
  int skipped = 0;
  for (const auto& form : {forms.left_ideal_2_testable, forms.right_ideal_2_testable, forms.two_sided_2_testable}) {
    if (!form) {
      ++skipped;
    } else if (*form != forms.local_1_testable) {
      throw InternalInconsistency("local testability forms disagree: eSe 1-testable = " +
                                  std::to_string(forms.local_1_testable) + ", Se/eS/SeS 2-testable = " +
                                  std::to_string(forms.left_ideal_2_testable.value_or(-1)) + "/" +
                                  std::to_string(forms.right_ideal_2_testable.value_or(-1)) + "/" +
                                  std::to_string(forms.two_sided_2_testable.value_or(-1)));
    }
  }
  if (skipped != 0) notes = std::to_string(skipped) + " ideal cross-check(s) skipped over budget";
  if (forms.local_1_testable) return Verdict::pass("lt", notes);

  for (Element e : idempotents(s)) {
    const auto t = sandwich(s, e, e);
    for (Element x : t) {
      if (!is_idempotent(s, x)) {
        return Verdict::fail("lt", elements_witness("eSe idempotent", {e, x}, "x in eSe with x*x != x"), notes);
      }
    }
    for (Element x : t) {
      for (Element y : t) {
        if (s.product(x, y) != s.product(y, x)) {
          return Verdict::fail("lt", elements_witness("eSe commutative", {e, x, y}, "x, y in eSe with xy != yx"),
                               notes);
        }
      }
    }
  }
  throw InternalInconsistency("local testability failed without a witness");
}

std::optional<std::size_t> order_lower_bound_semigroup(const FiniteSemigroup& s) {
  if (!check_local_testability_semigroup(s)) return std::nullopt;
  std::vector<Element> all(s.size());
  for (Element x = 0; x < s.size(); ++x) all[x] = x;
  if (is_1_testable(s, all)) return 1;
  // A k-testable semigroup has S^(k-1) inside a 2-testable ideal, so the
  // least m with S^m 2-testable gives k >= m + 1.
  const auto chain = power_chain(s);
  for (std::size_t m = 1; m <= chain.powers.size(); ++m) {
    if (is_2_testable(s, chain.powers[m - 1])) return std::max<std::size_t>(2, m + 1);
  }
  throw InternalInconsistency("locally testable semigroup with no 2-testable power");
}

Verdict check_threshold_lt_semigroup(const FiniteSemigroup& s) {
  if (auto a = is_aperiodic(s); !a) {
    a.property = "tlt";
    return a;
  }
  const auto idem = idempotents(s);
  // x in eSf gives x = xf, y in eSf gives y = ey, so x u y = x (f u e) y.
  for (Element e : idem) {
    for (Element f : idem) {
      const auto xs = sandwich(s, e, f);
      const auto vs = sandwich(s, f, e);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
          for (Element v : vs) {
            if (s.product({xs[i], v, xs[j]}) != s.product({xs[j], v, xs[i]})) {
              return Verdict::fail("tlt", elements_witness("eafuebf = ebfueaf", {e, f, xs[i], v, xs[j]},
                                                           "e, f idempotent; x, y in eSf; xuy != yux"));
            }
          }
        }
      }
    }
  }
  return Verdict::pass("tlt");
}

Verdict simon_identities(const FiniteSemigroup& s) {
  if (auto a = is_aperiodic(s); !a) {
    a.property = "pw";
    return a;
  }
  std::vector<Element> omega(s.size());
  for (Element x = 0; x < s.size(); ++x) omega[x] = omega_power(s, x);
  for (Element x = 0; x < s.size(); ++x) {
    for (Element y = 0; y < s.size(); ++y) {
      const Element w = omega[s.product(x, y)];
      if (s.product(w, x) != w) {
        return Verdict::fail("pw", elements_witness("(xy)^w x = (xy)^w", {x, y, w}, "(xy)^w x != (xy)^w"));
      }
      if (s.product(y, w) != w) {
        return Verdict::fail("pw", elements_witness("y (xy)^w = (xy)^w", {x, y, w}, "y (xy)^w != (xy)^w"));
      }
    }
  }
  return Verdict::pass("pw");
}

Verdict is_j_trivial(const FiniteSemigroup& s) {
  // y lies in S1 x S1 iff y is reachable from x by left and right
  // multiplications by generators; equal ideals are mutual reachability.
  const std::size_t g = s.generator_count();
  auto comps = detail::tarjan(s.size(), 2 * g, static_cast<std::size_t>(-1), [&](std::size_t x, std::size_t i) {
    const auto e = static_cast<Element>(x);
    return static_cast<std::size_t>(i < g ? s.right(e, i) : s.product(static_cast<Element>(i - g), e));
  });
  std::vector<Element> first(comps.size.size(), static_cast<Element>(-1));
  for (Element x = 0; x < s.size(); ++x) {
    auto c = comps.component[x];
    if (first[c] == static_cast<Element>(-1)) {
      first[c] = x;
    } else {
      return Verdict::fail("j-trivial", elements_witness("distinct ideals", {first[c], x},
                                                         "distinct elements generating the same ideal"));
    }
  }
  return Verdict::pass("j-trivial");
}

Verdict check_piecewise_semigroup(const FiniteSemigroup& s) {
  auto v = simon_identities(s);
  const auto j = is_j_trivial(s);
  if (v.holds != j.holds) {
    throw InternalInconsistency(std::string("Simon identities say ") + (v.holds ? "true" : "false") +
                                " but J-triviality says " + (j.holds ? "true" : "false"));
  }
  return v;
}

Verdict check_local_idempotency_semigroup(const FiniteSemigroup& s) {
  for (Element e : idempotents(s)) {
    for (Element x = 0; x < s.size(); ++x) {
      const Element ese = s.product({e, x, e});
      if (!is_idempotent(s, ese)) {
        return Verdict::fail("li", elements_witness("(ese)^2 = ese", {e, x, ese}, "ese is not idempotent"));
      }
    }
  }
  return Verdict::pass("li");
}

Verdict locally_idempotent_with(const FiniteSemigroup& s, LocalIdentity identity) {
  auto v = check_local_idempotency_semigroup(s);
  if (!v) return v;
  for (Element e : idempotents(s)) {
    const auto t = sandwich(s, e, e);
    for (Element x : t) {
      for (Element y : t) {
        const Element xyx = s.product({x, y, x});
        const Element rhs = identity == LocalIdentity::kXyxIsXy ? s.product(x, y) : s.product(y, x);
        if (xyx != rhs) {
          return Verdict::fail("", elements_witness(identity == LocalIdentity::kXyxIsXy ? "xyx = xy in eSe"
                                                                                          : "xyx = yx in eSe",
                                                    {e, x, y}, "local identity fails in eSe"));
        }
      }
    }
  }
  return Verdict::pass("");
}

Verdict check_left_lt_semigroup(const FiniteSemigroup& s) {
  auto v = locally_idempotent_with(s, kLeftLocalIdentity);
  v.property = "left";
  return v;
}

Verdict check_right_lt_semigroup(const FiniteSemigroup& s) {
  auto v = locally_idempotent_with(s, kRightLocalIdentity);
  v.property = "right";
  return v;
}

}  // namespace ltest
