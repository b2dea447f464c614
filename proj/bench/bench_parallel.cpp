#include <benchmark/benchmark.h>

#include "parmod/relations.hpp"
#include "parmod/sweep.hpp"

using namespace parmod;

static void BM_BettiSweepParallel(benchmark::State& state) {
  const auto grid = betti_grid(static_cast<int>(state.range(0)), 17);
  for (auto _ : state) benchmark::DoNotOptimize(betti_sweep(grid));
}
BENCHMARK(BM_BettiSweepParallel)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_BettiSweepSerial(benchmark::State& state) {
  const auto grid = betti_grid(static_cast<int>(state.range(0)), 17);
  for (auto _ : state) benchmark::DoNotOptimize(betti_sweep_serial(grid));
}
BENCHMARK(BM_BettiSweepSerial)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_HilbertParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_series_quotient(n, hilbert_default_max_degree(n)));
}
BENCHMARK(BM_HilbertParallel)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_HilbertSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_series_quotient_serial(n, hilbert_default_max_degree(n)));
}
BENCHMARK(BM_HilbertSerial)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
