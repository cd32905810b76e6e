#include <benchmark/benchmark.h>

#include "hsaw/enumeration.hpp"
#include "hsaw/planar_map.hpp"
#include "hsaw/sap_geometry.hpp"

using namespace hsaw;

static void BM_CountSaws73(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto map = PlanarMap::build_ball({7, 3}, n);
  for (auto _ : state) {
    auto table = count_saws(map, n);
    benchmark::DoNotOptimize(table.values.back());
  }
}
BENCHMARK(BM_CountSaws73)->Arg(6)->Arg(8)->Arg(10);

static void BM_CountSaps73(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto map = PlanarMap::build_ball({7, 3}, n);
  for (auto _ : state) {
    auto table = count_saps(map, n);
    benchmark::DoNotOptimize(table.values.back());
  }
}
BENCHMARK(BM_CountSaps73)->Arg(8)->Arg(10);

static void BM_SapGeometrySweep(benchmark::State& state) {
  auto map = PlanarMap::build_ball({7, 3}, 8);
  for (auto _ : state) {
    long long margin_sum = 0;
    enumerate_saps(map, 8, [&](const Sap& sap) {
      margin_sum += check_main_lemma(analyze_sap(map, sap), map.params());
    });
    benchmark::DoNotOptimize(margin_sum);
  }
}
BENCHMARK(BM_SapGeometrySweep);

static void BM_Displacement37(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto map = PlanarMap::build_ball({3, 7}, n);
  for (auto _ : state) {
    auto hist = displacement_distribution(map, n);
    benchmark::DoNotOptimize(hist.total);
  }
}
BENCHMARK(BM_Displacement37)->Arg(12)->Arg(16);
