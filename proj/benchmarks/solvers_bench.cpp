#include "ivc2/cubic_graph.hpp"
#include "ivc2/gadgets.hpp"
#include "ivc2/reduction.hpp"
#include "ivc2/solver.hpp"

#include <benchmark/benchmark.h>

using namespace ivc2;

static void BM_TwinThreeBlock(benchmark::State& state) {
  auto g = build_twin_graph(make_three_block(Coord(0), static_cast<int>(state.range(0))).model);
  for (auto _ : state) benchmark::DoNotOptimize(maxcut_twin_exact(g).value);
}
BENCHMARK(BM_TwinThreeBlock)->Arg(10)->Arg(100)->Arg(1000);

static void BM_TwinSwitch(benchmark::State& state) {
  auto sw = make_switch_gadget(Coord(0), static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  auto g = build_twin_graph(attach_stubs(sw, Coord(17)).model);
  TwinOptions o;
  o.max_width = 12;
  for (auto _ : state) benchmark::DoNotOptimize(maxcut_twin_exact(g, {}, o).value);
}
BENCHMARK(BM_TwinSwitch)->Args({5, 3})->Args({7, 4})->Args({12, 8})->Unit(benchmark::kMillisecond);

static void BM_BruteForce(benchmark::State& state) {
  auto g = build_twin_graph(make_vertex_gadget(Coord(0), 1).model);
  for (auto _ : state) benchmark::DoNotOptimize(maxcut_bruteforce(g).value);
}
BENCHMARK(BM_BruteForce)->Unit(benchmark::kMillisecond);

static void BM_CompileK4(benchmark::State& state) {
  auto g = make_k4();
  for (auto _ : state) benchmark::DoNotOptimize(compile(g, ReductionParams{4, 3, 2, 3}).h.size());
}
BENCHMARK(BM_CompileK4)->Unit(benchmark::kMillisecond);

static void BM_CompileRandom(benchmark::State& state) {
  auto n = static_cast<int>(state.range(0));
  auto g = random_cubic(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(compile(g, ReductionParams{n, 3, 2, 3}).h.size());
}
BENCHMARK(BM_CompileRandom)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
