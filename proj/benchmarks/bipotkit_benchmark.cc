// Copyright 2026 The bipotkit Authors
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

#include <algorithm>
#include <random>
#include <vector>

#include "bipotkit/bipotential.h"
#include "bipotkit/cover.h"
#include "bipotkit/discrete_conjugate.h"
#include "bipotkit/law_graph.h"

namespace bipotkit {
namespace {

struct Samples {
  std::vector<Vector> grid;
  std::vector<ExtendedValue> values;
  std::vector<Vector> dual;
};

Samples RandomSamples(int n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> v(-1.0, 1.0);
  Samples s{ProductGrid(Linspace(-1.0, 1.0, n), 1), {}, ProductGrid(Linspace(-3.0, 3.0, n), 1)};
  for (int i = 0; i < n; ++i) s.values.push_back(v(rng));
  return s;
}

void BM_ConjugateBruteForce(benchmark::State& state) {
  const Samples s = RandomSamples(int(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(DiscreteConjugateBruteForce(s.grid, s.values, s.dual));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConjugateBruteForce)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_ConjugateLinear1D(benchmark::State& state) {
  const Samples s = RandomSamples(int(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(DiscreteConjugateLinear1D(s.grid, s.values, s.dual));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConjugateLinear1D)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_CycleCheck(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> v(-1.0, 1.0);
  std::vector<LawGraph::Pair> pairs;
  // Gradient samples of a convex quadratic: the check runs to completion.
  for (int i = 0; i < state.range(0); ++i) {
    const Vector x{v(rng), v(rng)};
    pairs.emplace_back(x, Vector{2.0 * x[0] + 0.5 * x[1], 0.5 * x[0] + x[1]});
  }
  const LawGraph m(pairs);
  for (auto _ : state) benchmark::DoNotOptimize(CyclicMonotonicityCheck(m, 1e-9));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CycleCheck)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNCubed);

void BM_GridInf(benchmark::State& state) {
  const Cover c = state.range(0) == 0 ? Cover::Quadratic(2) : Cover::Norm(2);
  const Bipotential b = BuildInf(c, InfMode::kGrid);
  const std::vector<Vector> grid = ProductGrid(Linspace(-2.0, 2.0, 41), 2);
  for (auto _ : state) {
    double sum = 0.0;
    for (const auto& x : grid) {
      for (const auto& y : grid) sum += b(x, y).ToDouble();
    }
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * int64_t(grid.size() * grid.size()));
  state.SetLabel(state.range(0) == 0 ? "quadratic" : "norm");
}
BENCHMARK(BM_GridInf)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace bipotkit

BENCHMARK_MAIN();
