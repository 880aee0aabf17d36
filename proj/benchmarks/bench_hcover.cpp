// Copyright 2026 The hcover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "hcover/cantor.hpp"
#include "hcover/hausdorff.hpp"
#include "hcover/integrate.hpp"

namespace {

using namespace hcover;

FiniteMetricSpace random_plane(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::pair<double, double>> p(n);
  for (auto& q : p) q = {u(rng), u(rng)};
  std::vector<std::vector<double>> d(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      d[i][j] = std::hypot(p[i].first - p[j].first, p[i].second - p[j].second);
    }
  }
  return FiniteMetricSpace(std::move(d));
}

// O(3^n) set-partition DP.
void BM_PartitionDP(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const FiniteMetricSpace s = random_plane(n, 1);
  FiniteSolverOptions opt;
  opt.diameter_floor = 0.05;
  opt.size_limit = kHardExactLimit;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        content_exact_finite(s, PointSet::full(n), Gauge::power(1.0), {}, opt).value);
  }
}
BENCHMARK(BM_PartitionDP)->DenseRange(8, 16, 2)->Unit(benchmark::kMillisecond);

// Cell DP on a random union of deep cells, non-self-similar gauge.
void BM_CellDP(benchmark::State& state) {
  const auto depth = static_cast<std::size_t>(state.range(0));
  const CantorSpace s(BranchingProfile::constant(2), RadiusSchedule::geometric(1.0, 1.0 / 3.0));
  std::mt19937_64 rng(2);
  std::vector<Cell> targets;
  for (const Cell& c : children(s, Cell::root(), depth)) {
    if (rng() % 3 == 0) targets.push_back(c);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(content_cells(s, targets, Gauge::power(0.5), depth).value);
  }
  state.counters["targets"] = static_cast<double>(targets.size());
}
BENCHMARK(BM_CellDP)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_RiemannSum(benchmark::State& state) {
  const auto depth = static_cast<std::size_t>(state.range(0));
  const CantorSpace s(BranchingProfile::constant(2), RadiusSchedule::geometric(1.0, 0.5));
  const FunctionSpec f = expansion_value(s);
  const SampleSet samples = sample_set(s, depth, SampleStrategy::kSeededRandom, 7);
  for (auto _ : state) benchmark::DoNotOptimize(riemann_sum(s, f, samples));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(samples.size()));
}
BENCHMARK(BM_RiemannSum)->DenseRange(10, 18, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
