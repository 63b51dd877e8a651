#include <benchmark/benchmark.h>

#include "qclose/experiments.hpp"
#include "qclose/simulator.hpp"
#include "qclose/solvers.hpp"

namespace {

const qclose::ModelSpec& spec() {
  static const qclose::ModelSpec s = qclose::builtin_experiment(7);
  return s;
}

const std::vector<double>& grid() {
  static const std::vector<double> g = qclose::make_grid(spec(), 0.05);
  return g;
}

void BM_EnsembleSerial(benchmark::State& state) {
  const auto reps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qclose::simulate_ensemble_serial(spec(), reps, 1, grid()));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_EnsembleParallel(benchmark::State& state) {
  const auto reps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qclose::simulate_ensemble(spec(), reps, 1, grid()));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Adjusted(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qclose::adjusted_moments(spec()));
}

}  // namespace

BENCHMARK(BM_EnsembleSerial)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnsembleParallel)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Adjusted)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
