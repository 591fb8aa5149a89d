#include <benchmark/benchmark.h>

#include "gpcops/solver.hpp"
#include "gpcops/strategies.hpp"

using namespace gpcops;

// Full retrograde solve of GP(n,k) with c cops.
static void BM_SolveGp(benchmark::State& state) {
  const Graph g = build_gp({static_cast<int>(state.range(0)), static_cast<int>(state.range(1))});
  const int c = static_cast<int>(state.range(2));
  std::uint64_t states = 0;
  for (auto _ : state) {
    const SolveTable t = solve(g, c);
    states = t.state_count();
    benchmark::DoNotOptimize(t.complete());
  }
  state.counters["states"] = static_cast<double>(states);
  state.counters["states/s"] = benchmark::Counter(static_cast<double>(states), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_SolveGp)->Args({10, 3, 2})->Args({16, 4, 3})->Args({20, 7, 3})->Args({26, 10, 3})->Unit(benchmark::kMillisecond);

// The 3-cop decision used for the table, with early stopping.
static void BM_IsCopwin(benchmark::State& state) {
  const Graph g = build_gp({static_cast<int>(state.range(0)), static_cast<int>(state.range(1))});
  const int c = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(is_copwin(g, c).cop_win);
}
BENCHMARK(BM_IsCopwin)->Args({24, 5, 3})->Args({28, 6, 3})->Args({32, 2, 3})->Unit(benchmark::kMillisecond);

static void BM_Girth(benchmark::State& state) {
  const Graph g = build_gp({static_cast<int>(state.range(0)), 7});
  for (auto _ : state) benchmark::DoNotOptimize(girth(g));
}
BENCHMARK(BM_Girth)->Arg(40)->Arg(200)->Arg(1000);

static void BM_FourCopGreedy(benchmark::State& state) {
  const GpParams p{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  int turns = 0;
  for (auto _ : state) {
    auto c = four_cop_controller(p);
    const GameTrace t = simulate(*c, RobberPolicy::greedy(), 50 * p.n);
    turns = t.cop_turns;
  }
  state.counters["cop_turns"] = turns;
}
BENCHMARK(BM_FourCopGreedy)->Args({13, 5})->Args({26, 10})->Unit(benchmark::kMillisecond);

static void BM_GpN3Greedy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto c = gp_n3_controller(n);
    benchmark::DoNotOptimize(simulate(*c, RobberPolicy::greedy(), 50 * n).outcome);
  }
}
BENCHMARK(BM_GpN3Greedy)->Arg(13)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
