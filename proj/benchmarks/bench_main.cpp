#include <benchmark/benchmark.h>

#include "pdiv/canonical.hpp"
#include "pdiv/detectors.hpp"
#include "pdiv/divisibility.hpp"
#include "pdiv/graph.hpp"
#include "pdiv/structure.hpp"

using namespace pdiv;

namespace {

// Deterministic pseudo-random graph; the bench must not depend on <random>'s
// distribution implementation.
Graph sample_graph(int n, unsigned seed) {
  Graph g(n);
  std::uint64_t x = seed * 0x9E3779B97F4A7C15ULL + 1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      x ^= x << 13;
      x ^= x >> 7;
      x ^= x << 17;
      if (x & 1U) g.add_edge(u, v);
    }
  return g;
}

void BM_CanonicalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = sample_graph(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g, n));
}
BENCHMARK(BM_CanonicalForm)->Arg(6)->Arg(8)->Arg(10)->Arg(12);

void BM_FindOddHole(benchmark::State& state) {
  const Graph g = mycielskian(mycielskian(cycle_graph(5)));
  for (auto _ : state) benchmark::DoNotOptimize(find_hole(g, Parity::odd, 5));
}
BENCHMARK(BM_FindOddHole);

void BM_ContainsBull(benchmark::State& state) {
  const Graph g = sample_graph(static_cast<int>(state.range(0)), 11);
  const Graph bull = make_named("bull");
  for (auto _ : state) benchmark::DoNotOptimize(contains_induced(g, bull));
}
BENCHMARK(BM_ContainsBull)->Arg(8)->Arg(16)->Arg(24);

void BM_PerfectlyDivisible(benchmark::State& state) {
  const Graph g = sample_graph(static_cast<int>(state.range(0)), 5);
  DivisibilityOptions opts;
  opts.memo = nullptr;
  for (auto _ : state) benchmark::DoNotOptimize(is_perfectly_divisible(g, opts));
}
BENCHMARK(BM_PerfectlyDivisible)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_GraphF_BoundedWeights(benchmark::State& state) {
  const Graph f = build_graph_F();
  DivisibilityOptions opts;
  opts.memo = nullptr;
  for (auto _ : state) benchmark::DoNotOptimize(is_perfectly_weight_divisible_bounded(f, 2, opts));
}
BENCHMARK(BM_GraphF_BoundedWeights)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
