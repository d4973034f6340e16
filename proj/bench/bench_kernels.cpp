// Serial reference against the OpenMP kernels. Set OMP_NUM_THREADS to vary
// the parallel side.

#include <benchmark/benchmark.h>

#include "alphacf/alpha_dynamics.hpp"
#include "alphacf/quadratic_intervals.hpp"

using namespace alphacf;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) == 0 ? Execution::serial : Execution::parallel; }

void BM_EntropyScan(benchmark::State& state) {
  EntropyConfig config{200'000, 1000, 8, mode(state)};
  for (auto _ : state) benchmark::DoNotOptimize(entropy_scan(0.3, 1.0, 8, 17, config));
  state.SetItemsProcessed(state.iterations() * 8 * 8 * 200'000);
  state.SetLabel(state.range(0) == 0 ? "serial" : "openmp");
}

void BM_EnumerateQE(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_qe(state.range(1), mode(state)));
  state.SetLabel(state.range(0) == 0 ? "serial" : "openmp");
}

void BM_CheckMatching(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_matching(30, mode(state)));
  state.SetLabel(state.range(0) == 0 ? "serial" : "openmp");
}

}  // namespace

BENCHMARK(BM_EntropyScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EnumerateQE)->Args({0, 60})->Args({1, 60})->Args({0, 120})->Args({1, 120})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CheckMatching)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
