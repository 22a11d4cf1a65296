#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "terrarough/geometry.hpp"

namespace {

std::vector<terrarough::Point2> random_sites(std::size_t n) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1000.0);
  std::vector<terrarough::Point2> sites(n);
  for (auto& p : sites) p = {u(rng), u(rng)};
  return sites;
}

void BM_Delaunay(benchmark::State& state) {
  const auto sites = random_sites(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(terrarough::delaunay(sites));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Delaunay)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond)->Complexity();

void BM_SibsonWeights(benchmark::State& state) {
  const auto sites = random_sites(1 << 14);
  const auto tri = terrarough::delaunay(sites);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(100.0, 900.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(terrarough::sibson_weights(tri, {u(rng), u(rng)}));
  }
}
BENCHMARK(BM_SibsonWeights);

}  // namespace
