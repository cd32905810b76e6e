#include <benchmark/benchmark.h>

#include "hsaw/bounds.hpp"
#include "hsaw/transfer.hpp"

using namespace hsaw;

static void BM_MixedBound(benchmark::State& state) {
  for (auto _ : state) {
    auto b = mu_p_upper_mixed({7, 3});
    benchmark::DoNotOptimize(b.value);
  }
}
BENCHMARK(BM_MixedBound);

static void BM_PerronRoot(benchmark::State& state) {
  auto sys = builtin_system("h38");
  for (auto _ : state) {
    auto r = perron_root(sys);
    benchmark::DoNotOptimize(r.lambda);
  }
}
BENCHMARK(BM_PerronRoot);

static void BM_BracketSweep(benchmark::State& state) {
  for (auto _ : state) {
    auto rows = asymptotic_check(7, 10000);
    benchmark::DoNotOptimize(rows.size());
  }
}
BENCHMARK(BM_BracketSweep);

static void BM_FullReport(benchmark::State& state) {
  for (auto _ : state) {
    auto rep = bounds_report({3, 7});
    benchmark::DoNotOptimize(rep.verdict_mu_p_lt_mu_w);
  }
}
BENCHMARK(BM_FullReport);

BENCHMARK_MAIN();
