#include <benchmark/benchmark.h>

#include "gridscan/grid.hpp"
#include "gridscan/pca.hpp"
#include "gridscan/scan.hpp"
#include "gridscan/synthetic.hpp"

namespace {

gridscan::Dataset make_sine(std::size_t points, std::uint32_t dim) {
  gridscan::SyntheticSpec spec;
  spec.kind = gridscan::SyntheticKind::sine_curve;
  spec.points = points;
  spec.dim = dim;
  spec.outlier_fraction = 0.05;
  spec.seed = 42;
  return gridscan::generate(spec);
}

void BM_BuildHistogram(benchmark::State& state) {
  const auto dataset = make_sine(static_cast<std::size_t>(state.range(0)), 2);
  const gridscan::GridResolution res{16, 2};
  for (auto _ : state) {
    auto histogram = gridscan::build_histogram(dataset, res);
    benchmark::DoNotOptimize(histogram);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildHistogram)->Range(1 << 10, 1 << 17)->Complexity();

void BM_Scan(benchmark::State& state) {
  const auto dataset = make_sine(static_cast<std::size_t>(state.range(0)), 2);
  const gridscan::ScanConfig config{};
  for (auto _ : state) {
    auto outcome = gridscan::scan(dataset, config);
    benchmark::DoNotOptimize(outcome);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Scan)->Range(1 << 10, 1 << 17)->Complexity();

void BM_PcaFit(benchmark::State& state) {
  const auto dataset = make_sine(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) {
    auto axes = gridscan::pca_fit(dataset, 2);
    benchmark::DoNotOptimize(axes);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PcaFit)->Range(1 << 10, 1 << 16)->Complexity();

void BM_ScanThreads(benchmark::State& state) {
  const auto dataset = make_sine(1 << 16, 2);
  const gridscan::ScanConfig config{};
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto outcome = gridscan::scan(dataset, config, threads);
    benchmark::DoNotOptimize(outcome);
  }
}
BENCHMARK(BM_ScanThreads)->Arg(1)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
