#include <benchmark/benchmark.h>

#include <random>

#include "ltest/bridge.hpp"
#include "ltest/graph_checks.hpp"
#include "ltest/reachability.hpp"
#include "ltest/semigroup_checks.hpp"

using namespace ltest;

namespace {

TransitionGraph random_graph(std::size_t n, std::size_t letters, bool acyclic = false) {
  std::mt19937_64 rng(n * 31 + letters);
  TransitionGraph g(n, letters);
  for (Node p = 0; p < n; ++p)
    for (Letter a = 0; a < letters; ++a)
      g.set(p, a, static_cast<Node>(acyclic ? p + rng() % (n - p) : rng() % n));
  return g;
}

void BM_Reachability(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(reachability(g, 2));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Reachability)->RangeMultiplier(2)->Range(16, 128)->Complexity();

void BM_LocalTestability(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(check_local_testability_graph(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LocalTestability)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_RightLocalTestability(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(check_right_lt_graph(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RightLocalTestability)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_Threshold(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(check_threshold_lt_graph(g));
}
BENCHMARK(BM_Threshold)->RangeMultiplier(2)->Range(8, 32);

void BM_Piecewise(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 3, true);
  for (auto _ : state) benchmark::DoNotOptimize(check_piecewise_graph(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Piecewise)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_A2Power(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(a2_power(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_A2Power)->DenseRange(1, 4);

void BM_SemigroupLocalTestability(benchmark::State& state) {
  const auto s = a2_power(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_local_testability_semigroup(s));
}
BENCHMARK(BM_SemigroupLocalTestability)->DenseRange(1, 3);

}  // namespace

BENCHMARK_MAIN();
