// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "fbelos/analysis.hpp"
#include "fbelos/belos.hpp"
#include "fbelos/kernels.hpp"
#include "fbelos/profile.hpp"

using namespace fbelos;

namespace {

kernels::Policy policy_of(const benchmark::State& state) {
  return state.range(0) == 0 ? kernels::Policy::Serial : kernels::Policy::Parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "omp"); }

void BM_MapIndexed(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(1));
  const auto work = [](std::size_t i) { return std::sin(1e-3 * static_cast<double>(i)); };
  for (auto _ : state) {
    auto out = state.range(0) == 0 ? kernels::serial::map_indexed<double>(n, work)
                                   : kernels::omp::map_indexed<double>(n, work);
    benchmark::DoNotOptimize(out.data());
  }
  label(state);
}

void BM_MaxElement(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(1));
  const auto values = kernels::serial::map_indexed<double>(
      n, [](std::size_t i) { return std::cos(1e-3 * static_cast<double>(i)); });
  for (auto _ : state) {
    const auto e = state.range(0) == 0 ? kernels::serial::max_element(values)
                                       : kernels::omp::max_element(values);
    benchmark::DoNotOptimize(e);
  }
  label(state);
}

void BM_NestingExcess(benchmark::State& state) {
  const Profile f = preset("sine");
  for (auto _ : state) benchmark::DoNotOptimize(nesting_excess(f, 0.37, policy_of(state)));
  label(state);
}

void BM_Characterization(benchmark::State& state) {
  const Profile f = preset("sine");
  const auto n = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(characterization_residual(f, n, policy_of(state)));
  label(state);
}

void BM_AnalyzeSweep(benchmark::State& state) {
  std::vector<SweepCell> cells;
  for (const char* name : {"parbelos", "sine"})
    for (int i = 1; i <= 4; ++i) cells.push_back({preset(name), i / 5.0});
  const AnalysisOptions options;
  for (auto _ : state) benchmark::DoNotOptimize(analyze_sweep(cells, options, policy_of(state)).size());
  label(state);
}

}  // namespace

BENCHMARK(BM_MapIndexed)->ArgsProduct({{0, 1}, {1 << 12, 1 << 18}});
BENCHMARK(BM_MaxElement)->ArgsProduct({{0, 1}, {1 << 12, 1 << 20}});
BENCHMARK(BM_NestingExcess)->Args({0, 0})->Args({1, 0});
BENCHMARK(BM_Characterization)->ArgsProduct({{0, 1}, {1001, 100001}});
BENCHMARK(BM_AnalyzeSweep)->Args({0, 0})->Args({1, 0})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
