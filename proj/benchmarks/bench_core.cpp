#include <benchmark/benchmark.h>

#include <vector>

#include "pinch/pinch.hpp"

namespace {

const pinch::ChannelParams& channel() {
  static const pinch::ChannelParams params = pinch::derive_channel_params({});
  return params;
}

const std::vector<pinch::UserSpec>& users() {
  static const std::vector<pinch::UserSpec> list = pinch::generate_users({}, 42);
  return list;
}

void BM_OutageArea(benchmark::State& state) {
  pinch::CoverageProblem p{10.0, 3.0, 11.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(pinch::outage_area(p));
    p.c = p.c == 11.0 ? 11.5 : 11.0;
  }
}
BENCHMARK(BM_OutageArea);

void BM_SolveCoverageRadius(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(pinch::solve_coverage_radius(10.0, 3.0, 0.01));
  }
}
BENCHMARK(BM_SolveCoverageRadius);

void BM_Objective(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(pinch::objective(users(), 25.0, channel()));
  }
}
BENCHMARK(BM_Objective);

void BM_Pso(benchmark::State& state) {
  pinch::PsoConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pinch::pso_optimize(users(), channel(), cfg).allocation.total_power);
  }
}
BENCHMARK(BM_Pso)->Unit(benchmark::kMillisecond);

void BM_GridSearch(benchmark::State& state) {
  const double step = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pinch::grid_search(users(), channel(), step).allocation.total_power);
  }
}
BENCHMARK(BM_GridSearch)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_MonteCarloArea(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pinch::mc_outage_area({10.0, 3.0, 11.0}, n, 7, 1).value);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarloArea)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
