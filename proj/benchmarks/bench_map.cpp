#include <benchmark/benchmark.h>

#include "hsaw/planar_map.hpp"

using namespace hsaw;

static void BM_BuildBall73(benchmark::State& state) {
  int radius = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto map = PlanarMap::build_ball({7, 3}, radius);
    benchmark::DoNotOptimize(map.vertex_count());
  }
}
BENCHMARK(BM_BuildBall73)->Arg(4)->Arg(8)->Arg(12);

static void BM_BuildBall37(benchmark::State& state) {
  int radius = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto map = PlanarMap::build_ball({3, 7}, radius);
    benchmark::DoNotOptimize(map.vertex_count());
  }
}
BENCHMARK(BM_BuildBall37)->Arg(8)->Arg(16);

static void BM_ValidateMap(benchmark::State& state) {
  auto map = PlanarMap::build_ball({8, 3}, 6);
  for (auto _ : state) {
    auto rep = validate_map(map);
    benchmark::DoNotOptimize(rep.ok());
  }
}
BENCHMARK(BM_ValidateMap);
