#include <benchmark/benchmark.h>

#include "vucert/forcing.hpp"

using namespace vucert;

static void BM_LoopForcing(benchmark::State& state) {
  GluingMatrix b = make_gluing(GraphCase::Loop, 3, 1, 4, 1);
  BlockPattern pattern = make_pattern(GraphCase::Loop, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(check_forcing_loop(b, pattern));
}
BENCHMARK(BM_LoopForcing);

static void BM_EdgeForcing(benchmark::State& state) {
  GluingMatrix b = make_gluing(GraphCase::Edge, 2, 1, 1, 1);
  BlockPattern pattern = make_pattern(GraphCase::Edge, {{1, 2, 0}, {1, 0, 1}, {0, 1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(check_forcing_edge(b, pattern));
}
BENCHMARK(BM_EdgeForcing);

static void BM_BuildSystem(benchmark::State& state) {
  GluingMatrix b = make_gluing(GraphCase::Edge, 2, 1, 1, 1);
  BlockPattern pattern = make_pattern(GraphCase::Edge, {{1, 2, 0}, {1, 0, 1}, {0, 1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(build_system(b, pattern));
}
BENCHMARK(BM_BuildSystem);
