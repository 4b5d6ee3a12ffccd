#include <benchmark/benchmark.h>

#include "leelab/bounds.hpp"
#include "leelab/compare.hpp"
#include "leelab/container.hpp"
#include "leelab/intersections.hpp"
#include "leelab/volumes.hpp"

using namespace leelab;

static void BM_BallVolume(benchmark::State& state) {
  const Space s(7, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ball_volume(s, s.max_distance() / 2));
}
BENCHMARK(BM_BallVolume)->Arg(10)->Arg(100)->Arg(400);

static void BM_Intersection(benchmark::State& state) {
  const Space s(5, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(intersection_size({s, 3, 3}));
}
BENCHMARK(BM_Intersection)->Arg(8)->Arg(32)->Arg(128);

static void BM_CountIndependentSets(benchmark::State& state) {
  const auto g = build_lee_graph(Space(static_cast<int>(state.range(0)), 2), 1);
  for (auto _ : state) benchmark::DoNotOptimize(count_independent_sets(g));
}
BENCHMARK(BM_CountIndependentSets)->Arg(4)->Arg(6)->Arg(8);

static void BM_MaxCode(benchmark::State& state) {
  const Space s(5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(max_code_size_exact(s, state.range(0)));
}
BENCHMARK(BM_MaxCode)->Arg(2)->Arg(3)->Arg(4);

static void BM_CompareTable(benchmark::State& state) {
  CompareOptions o;
  o.m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compare_table(o));
}
BENCHMARK(BM_CompareTable)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
