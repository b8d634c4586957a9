#include "ltest/semigroup.hpp"

#include <algorithm>
#include <sstream>

#include "ltest/error.hpp"
#include "ltest/text.hpp"

namespace ltest {

namespace {
constexpr Element kNone = static_cast<Element>(-1);
}

FiniteSemigroup FiniteSemigroup::from_cayley(std::size_t n, std::size_t g, std::vector<Element> rows,
                                             Validate validate, const Limits& limits) {
  if (n == 0) throw InvalidInput("semigroup must have at least one element");
  if (g == 0 || g > n) throw InvalidInput("generator count must be in 1..n");
  if (n > limits.semigroup_cap) throw CapExceeded("semigroup too large", n, limits.semigroup_cap);
  if (rows.size() != n * g) throw InvalidInput("Cayley table has wrong size");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= n) {
      throw InvalidInput("not closed: element " + std::to_string(i / g) + " times generator " +
                         std::to_string(i % g) + " is " + std::to_string(rows[i]) +
                         ", outside the declared " + std::to_string(n) + " elements");
    }
  }

  FiniteSemigroup s;
  s.n_ = n;
  s.g_ = g;
  s.rows_ = std::move(rows);
  s.parent_.assign(n, kNone);
  s.last_.assign(n, 0);

  // Breadth-first spanning tree of the right Cayley graph rooted at the
  // generators; every non-generator y is parent(y) * last(y).
  std::vector<Element> order;
  order.reserve(n);
  std::vector<bool> seen(n, false);
  for (Element j = 0; j < g; ++j) {
    seen[j] = true;
    order.push_back(j);
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    Element x = order[head];
    for (std::uint32_t j = 0; j < g; ++j) {
      Element y = s.right(x, j);
      if (seen[y]) continue;
      seen[y] = true;
      s.parent_[y] = x;
      s.last_[y] = j;
      order.push_back(y);
    }
  }
  if (order.size() != n) {
    auto missing = static_cast<std::size_t>(std::find(seen.begin(), seen.end(), false) - seen.begin());
    throw InvalidInput("element " + std::to_string(missing) + " is not a product of generators");
  }

  s.table_.assign(n * n, 0);
  for (Element y : order) {
    for (Element x = 0; x < n; ++x) {
      s.table_[x * n + y] = y < g ? s.right(x, y) : s.right(s.table_[x * n + s.parent_[y]], s.last_[y]);
    }
  }

  if (validate == Validate::kYes) {
    std::vector<Element> gens(g);
    for (Element j = 0; j < g; ++j) gens[j] = j;
    if (auto v = light_associativity_test(n, s.table_, gens)) {
      throw InvalidInput("not associative: (" + std::to_string(v->a) + " * " + std::to_string(v->generator) +
                         ") * " + std::to_string(v->b) + " != " + std::to_string(v->a) + " * (" +
                         std::to_string(v->generator) + " * " + std::to_string(v->b) + ")");
    }
  }
  return s;
}

Element FiniteSemigroup::product(std::initializer_list<Element> xs) const noexcept {
  auto it = xs.begin();
  Element acc = *it++;
  for (; it != xs.end(); ++it) acc = product(acc, *it);
  return acc;
}

std::vector<std::uint32_t> FiniteSemigroup::word(Element x) const {
  std::vector<std::uint32_t> w;
  while (x >= g_) {
    w.push_back(last_[x]);
    x = parent_[x];
  }
  w.push_back(x);
  std::reverse(w.begin(), w.end());
  return w;
}

void FiniteSemigroup::set_names(std::vector<std::string> names) {
  if (!names.empty() && names.size() != n_) throw InvalidInput("name list has wrong length");
  names_ = std::move(names);
}

std::string FiniteSemigroup::name(Element x) const {
  return names_.empty() ? std::to_string(x) : names_[x];
}

FiniteSemigroup parse_semigroup(std::string_view text, const Limits& limits) {
  auto lines = text::tokenize(text);
  if (lines.empty()) throw ParseError(1, 0, "empty semigroup file");
  const auto& header = lines.front();
  if (header.fields.size() != 3 || header.fields[0].value != "semigroup") {
    throw ParseError(header.number, 1, "expected header 'semigroup <n> <g>'");
  }
  const std::size_t n = text::to_index(header, header.fields[1]);
  const std::size_t g = text::to_index(header, header.fields[2]);
  if (n == 0) throw ParseError(header.number, header.fields[1].column, "element count must be positive");
  if (g == 0 || g > n) throw ParseError(header.number, header.fields[2].column, "generator count must be in 1..n");
  if (n > limits.semigroup_cap) throw CapExceeded("semigroup too large", n, limits.semigroup_cap);
  if (lines.size() != n + 1) {
    throw ParseError(lines.back().number, 0,
                     "expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size() - 1));
  }
  std::vector<Element> rows(n * g);
  for (std::size_t x = 0; x < n; ++x) {
    const auto& line = lines[x + 1];
    if (line.fields.size() != g) {
      throw ParseError(line.number, 0,
                       "row has " + std::to_string(line.fields.size()) + " fields, expected " + std::to_string(g));
    }
    for (std::size_t j = 0; j < g; ++j) {
      std::size_t v = text::to_index(line, line.fields[j]);
      if (v >= n) {
        throw InvalidInput("not closed: line " + std::to_string(line.number) + ", column " +
                           std::to_string(line.fields[j].column) + ": product " + std::to_string(v) +
                           " is outside the declared " + std::to_string(n) + " elements");
      }
      rows[x * g + j] = static_cast<Element>(v);
    }
  }
  return FiniteSemigroup::from_cayley(n, g, std::move(rows), FiniteSemigroup::Validate::kYes, limits);
}

std::string serialize_semigroup(const FiniteSemigroup& s) {
  std::ostringstream out;
  out << "semigroup " << s.size() << ' ' << s.generator_count() << '\n';
  for (Element x = 0; x < s.size(); ++x) {
    for (std::size_t j = 0; j < s.generator_count(); ++j) {
      if (j != 0) out << ' ';
      out << s.right(x, j);
    }
    out << '\n';
  }
  return out.str();
}

std::optional<AssociativityViolation> light_associativity_test(std::size_t n, std::span<const Element> table,
                                                               std::span<const Element> generators) {
  for (Element j : generators) {
    for (Element a = 0; a < n; ++a) {
      const Element aj = table[a * n + j];
      for (Element b = 0; b < n; ++b) {
        if (table[aj * n + b] != table[a * n + table[j * n + b]]) return AssociativityViolation{a, j, b};
      }
    }
  }
  return std::nullopt;
}

bool is_idempotent(const FiniteSemigroup& s, Element x) noexcept { return s.product(x, x) == x; }

std::vector<Element> idempotents(const FiniteSemigroup& s) {
  std::vector<Element> out;
  for (Element x = 0; x < s.size(); ++x) {
    if (is_idempotent(s, x)) out.push_back(x);
  }
  return out;
}

Element omega_power(const FiniteSemigroup& s, Element x) {
  // Some power x^k with k <= n is idempotent; scanning x, x^2, ... finds it.
  Element p = x;
  for (std::size_t k = 1; k <= s.size(); ++k) {
    if (is_idempotent(s, p)) return p;
    p = s.product(p, x);
  }
  throw InternalInconsistency("no idempotent power found for element " + std::to_string(x));
}

namespace {
std::vector<Element> times_all(const FiniteSemigroup& s, const std::vector<Element>& xs) {
  std::vector<bool> hit(s.size(), false);
  for (Element x : xs) {
    for (Element y = 0; y < s.size(); ++y) hit[s.product(x, y)] = true;
  }
  std::vector<Element> out;
  for (Element z = 0; z < s.size(); ++z) {
    if (hit[z]) out.push_back(z);
  }
  return out;
}

std::vector<Element> all_elements(const FiniteSemigroup& s) {
  std::vector<Element> out(s.size());
  for (Element x = 0; x < s.size(); ++x) out[x] = x;
  return out;
}
}  // namespace

std::vector<Element> power_ideal(const FiniteSemigroup& s, std::size_t m) {
  if (m == 0) throw InvalidInput("power must be at least 1");
  auto current = all_elements(s);
  for (std::size_t k = 1; k < m; ++k) {
    auto next = times_all(s, current);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

PowerChain power_chain(const FiniteSemigroup& s) {
  PowerChain chain;
  chain.powers.push_back(all_elements(s));
  while (true) {
    auto next = times_all(s, chain.powers.back());
    if (next == chain.powers.back()) break;
    chain.powers.push_back(std::move(next));
  }
  chain.stabilization_index = chain.powers.size();
  return chain;
}

std::vector<std::pair<Element, Element>> product_pairs(const FiniteSemigroup& s1, const FiniteSemigroup& s2) {
  const std::size_t n1 = s1.size(), n2 = s2.size();
  const std::size_t g1 = s1.generator_count(), g2 = s2.generator_count();
  std::vector<std::pair<Element, Element>> pairs;
  pairs.reserve(n1 * n2);
  std::vector<bool> used(n1 * n2, false);
  auto add = [&](Element x, Element y) {
    if (used[x * n2 + y]) return;
    used[x * n2 + y] = true;
    pairs.emplace_back(x, y);
  };
  for (Element x = 0; x < n1; ++x) {
    for (Element j = 0; j < g2; ++j) add(x, j);
  }
  for (Element i = 0; i < g1; ++i) {
    for (Element y = 0; y < n2; ++y) add(i, y);
  }
  for (Element x = 0; x < n1; ++x) {
    for (Element y = 0; y < n2; ++y) add(x, y);
  }
  return pairs;
}

FiniteSemigroup product_semigroups(const FiniteSemigroup& s1, const FiniteSemigroup& s2, const Limits& limits) {
  const std::size_t n1 = s1.size(), n2 = s2.size();
  const std::size_t g1 = s1.generator_count(), g2 = s2.generator_count();
  const std::size_t n = n1 * n2;
  if (n > limits.semigroup_cap) throw CapExceeded("product semigroup too large", n, limits.semigroup_cap);
  const std::size_t g = n1 * g2 + n2 * g1 - g1 * g2;

  auto pairs = product_pairs(s1, s2);
  std::vector<Element> index(n);
  for (Element i = 0; i < n; ++i) index[pairs[i].first * n2 + pairs[i].second] = i;

  std::vector<Element> rows(n * g);
  for (Element i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      const auto [x, y] = pairs[i];
      const auto [a, b] = pairs[j];
      rows[i * g + j] = index[s1.product(x, a) * n2 + s2.product(y, b)];
    }
  }
  auto out = FiniteSemigroup::from_cayley(n, g, std::move(rows), FiniteSemigroup::Validate::kNo, limits);
  if (!s1.names().empty() && !s2.names().empty()) {
    std::vector<std::string> names;
    names.reserve(n);
    for (auto [x, y] : pairs) names.push_back("(" + s1.name(x) + "," + s2.name(y) + ")");
    out.set_names(std::move(names));
  }
  return out;
}

FiniteSemigroup make_a2() {
  enum : Element { a, b, ab, ba, zero };
  // Columns: right multiplication by a, by b.
  std::vector<Element> rows = {
      a,    ab,    // a.a = a        a.b = ab
      ba,   zero,  // b.a = ba       b.b = 0
      a,    zero,  // ab.a = aba = a ab.b = 0
      ba,   b,     // ba.a = ba      ba.b = bab = b
      zero, zero,
  };
  auto s = FiniteSemigroup::from_cayley(5, 2, std::move(rows));
  s.set_names({"a", "b", "ab", "ba", "0"});
  return s;
}

FiniteSemigroup a2_power(std::size_t m, const Limits& limits) {
  if (m == 0) throw InvalidInput("power must be at least 1");
  auto a2 = make_a2();
  auto out = a2;
  for (std::size_t k = 1; k < m; ++k) out = product_semigroups(out, a2, limits);
  return out;
}

}  // namespace ltest
