#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace ltest::detail {

struct Components {
  std::vector<std::uint32_t> component;  // per vertex
  std::vector<std::uint32_t> size;       // per component
  std::vector<bool> cyclic;              // size > 1 or a loop
};

// Iterative Tarjan over vertices 0..n-1. `succ(v, i)` returns the i-th
// successor of v for i < degree, or `none` when that edge is absent.
// Components are numbered in emission order: sinks first.
template <class Succ>
Components tarjan(std::size_t n, std::size_t degree, std::size_t none, Succ succ) {
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  Components out;
  out.component.assign(n, kUnvisited);
  std::vector<std::uint32_t> index(n, kUnvisited);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  struct Frame {
    std::size_t v;
    std::size_t next;
  };
  std::vector<Frame> frames;
  std::uint32_t counter = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < degree) {
        std::size_t u = succ(f.v, f.next++);
        if (u == none) continue;
        if (index[u] == kUnvisited) {
          index[u] = low[u] = counter++;
          stack.push_back(u);
          on_stack[u] = true;
          frames.push_back({u, 0});
        } else if (on_stack[u]) {
          low[f.v] = std::min(low[f.v], index[u]);
        }
        continue;
      }
      const std::size_t v = f.v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      if (low[v] != index[v]) continue;
      const auto id = static_cast<std::uint32_t>(out.size.size());
      std::uint32_t members = 0;
      std::size_t u;
      do {
        u = stack.back();
        stack.pop_back();
        on_stack[u] = false;
        out.component[u] = id;
        ++members;
      } while (u != v);
      bool loop = false;
      for (std::size_t i = 0; i < degree && members == 1 && !loop; ++i) loop = succ(v, i) == v;
      out.size.push_back(members);
      out.cyclic.push_back(members > 1 || loop);
    }
  }
  return out;
}

}  // namespace ltest::detail
