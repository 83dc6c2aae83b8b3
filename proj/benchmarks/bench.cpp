#include <benchmark/benchmark.h>

#include "foxkit/bracket.hpp"
#include "foxkit/coloring.hpp"
#include "foxkit/fixtures.hpp"
#include "foxkit/symplectic.hpp"

using namespace foxkit;

namespace {

// Closures of (s1 S2)^n: n-fold alternating braids with 2n crossings.
Diagram alternating_braid(int n) {
  BraidWord w{3, {}};
  for (int i = 0; i < n; ++i) w.letters.insert(w.letters.end(), {1, -2});
  return braid_closure(w);
}

void BM_Bracket(benchmark::State& state) {
  Diagram d = alternating_braid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(d));
  state.SetLabel(std::to_string(d.crossing_count()) + " crossings");
}
BENCHMARK(BM_Bracket)->DenseRange(3, 9, 2)->Unit(benchmark::kMillisecond);

void BM_ColGroup(benchmark::State& state) {
  Diagram d = alternating_braid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(col_group(d, 3));
}
BENCHMARK(BM_ColGroup)->RangeMultiplier(2)->Range(4, 64);

void BM_ColGroupComposite(benchmark::State& state) {
  Diagram d = alternating_braid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(col_group(d, 45));
}
BENCHMARK(BM_ColGroupComposite)->RangeMultiplier(2)->Range(4, 64);

void BM_ChenColorings(benchmark::State& state) {
  Diagram d = parse_diagram("B 5: (s2 S1 s2 s3 S4)^4");
  for (auto _ : state) benchmark::DoNotOptimize(tri(d));
}
BENCHMARK(BM_ChenColorings);

void BM_EnumerateLagrangians(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Int p = state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_lagrangians(n, p));
}
BENCHMARK(BM_EnumerateLagrangians)->Args({2, 5})->Args({3, 3})->Args({3, 5})->Args({4, 3})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
