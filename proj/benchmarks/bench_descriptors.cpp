#include <benchmark/benchmark.h>

#include <random>

#include "terrarough/analysis.hpp"
#include "terrarough/descriptors.hpp"

namespace {

terrarough::Grid random_dem(std::size_t side) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n(0.0, 1.0);
  terrarough::Grid dem(side, side, 0.0, 0.0, 1.0, 0.0);
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) dem(r, c) = n(rng);
  }
  return dem;
}

void BM_RoughnessMap(benchmark::State& state) {
  const auto dem = random_dem(350);
  const auto d = terrarough::kAllDescriptors[static_cast<std::size_t>(state.range(0))];
  const terrarough::WindowSpec w(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(terrarough::roughness_map(dem, d, w));
  }
  state.SetLabel(std::string(terrarough::name(d)));
}
BENCHMARK(BM_RoughnessMap)->ArgsProduct({{0, 1, 2, 3, 4}, {3, 11}})->Unit(benchmark::kMillisecond);

void BM_ScaleSweep(benchmark::State& state) {
  const auto dem = random_dem(350);
  std::vector<terrarough::WindowSpec> windows;
  for (int w : terrarough::kDefaultWindows) windows.emplace_back(w);
  for (auto _ : state) {
    benchmark::DoNotOptimize(terrarough::scale_sweep(dem, windows, {}));
  }
}
BENCHMARK(BM_ScaleSweep)->Unit(benchmark::kMillisecond);

}  // namespace
