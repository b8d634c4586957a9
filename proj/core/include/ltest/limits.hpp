#pragma once

#include <cstddef>

namespace ltest {

// Resource caps. Exceeding any of them raises CapExceeded.
struct Limits {
  // Maximum number of tuples in a direct power of a graph.
  std::size_t tuple_cap = 20'000'000;
  // Maximum bits held by a reachability closure over SCCs.
  std::size_t closure_bit_cap = std::size_t{1} << 31;
  // Maximum semigroup size (the full n x n table is always materialized).
  std::size_t semigroup_cap = 20'000;
  // Maximum number of scanner states in the language oracle.
  std::size_t scanner_cap = 5'000'000;
  // Maximum number of subset states when determinizing a reversed acceptor.
  std::size_t determinize_cap = 1'000'000;
};

}  // namespace ltest
