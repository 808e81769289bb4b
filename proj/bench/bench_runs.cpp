// Serial against OpenMP-parallel execution of the 30-run experiment loop.
#include <benchmark/benchmark.h>

#include "lpbsa/harness.hpp"

namespace {

using lpbsa::harness::Algorithm;

lpbsa::harness::ExperimentConfig config_for(benchmark::State& state) {
  lpbsa::harness::ExperimentConfig cfg;
  cfg.runs = 30;
  cfg.dimension = static_cast<std::size_t>(state.range(0));
  cfg.evaluation_budget = 10000;
  cfg.base_seed = 7;
  return cfg;
}

void BM_SerialRuns(benchmark::State& state) {
  const auto cfg = config_for(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lpbsa::harness::run_experiment_serial(Algorithm::Lpbsa, "TF10", cfg));
  }
}

void BM_ParallelRuns(benchmark::State& state) {
  const auto cfg = config_for(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lpbsa::harness::run_experiment(Algorithm::Lpbsa, "TF10", cfg));
  }
}

}  // namespace

BENCHMARK(BM_SerialRuns)->Arg(2)->Arg(30)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ParallelRuns)->Arg(2)->Arg(30)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
