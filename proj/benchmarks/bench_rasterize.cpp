#include <benchmark/benchmark.h>

#include "terrarough/rasterize.hpp"
#include "terrarough/synthterrain.hpp"

namespace {

void BM_Rasterize(benchmark::State& state) {
  auto spec = terrarough::TerrainSpec::defaults(terrarough::Archetype::flat_rough);
  spec.extent = 100.0;
  const auto cloud = terrarough::generate(spec);
  const auto method = static_cast<terrarough::InterpMethod>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(terrarough::rasterize(cloud, method, 1.0));
  }
  state.SetLabel(std::string(terrarough::name(method)));
}
BENCHMARK(BM_Rasterize)
    ->Arg(static_cast<int>(terrarough::InterpMethod::natural_neighbour))
    ->Arg(static_cast<int>(terrarough::InterpMethod::tin_linear))
    ->Arg(static_cast<int>(terrarough::InterpMethod::nearest_neighbour))
    ->Unit(benchmark::kMillisecond);

}  // namespace
