#include <benchmark/benchmark.h>

#include "mfdim/families.hpp"
#include "mfdim/multifractal.hpp"

namespace {

void BM_DimensionEnumerate(benchmark::State& state) {
  const auto m = max_deng_mass(mfdim::FrameOfDiscernment(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mfdim::multifractal_dimension(m, 7.0, mfdim::EvaluationPath::Enumerate));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(m.focal_count()));
}
BENCHMARK(BM_DimensionEnumerate)->DenseRange(4, 20, 4);

void BM_DimensionProfile(benchmark::State& state) {
  const auto p = mfdim::max_deng_profile(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mfdim::multifractal_dimension(p, 7.0));
}
BENCHMARK(BM_DimensionProfile)->DenseRange(4, 20, 4)->Arg(64);

void BM_SpectrumProfile(benchmark::State& state) {
  const auto p = mfdim::max_deng_profile(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mfdim::spectrum_from_profile(p));
}
BENCHMARK(BM_SpectrumProfile)->Arg(6)->Arg(25)->Arg(64);

void BM_SpectrumEnumerate(benchmark::State& state) {
  const auto m = max_deng_mass(mfdim::FrameOfDiscernment(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(mfdim::spectrum(m));
}
BENCHMARK(BM_SpectrumEnumerate)->Arg(6)->Arg(12)->Arg(18);

void BM_MaxDengGridSweep(benchmark::State& state) {
  const double alphas[] = {1, 4, 7, 10, 13, 16, 19};
  for (auto _ : state) {
    for (std::size_t n = 2; n <= 20; n += 2) {
      benchmark::DoNotOptimize(mfdim::dimension_sweep(mfdim::max_deng_profile(n), alphas));
    }
  }
}
BENCHMARK(BM_MaxDengGridSweep);

}  // namespace

BENCHMARK_MAIN();
