// Copyright 2026 The implkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "implkit/fuzz.hpp"
#include "implkit/geometry.hpp"

namespace {

using namespace implkit;

void BM_CutSimplexVertices(benchmark::State& state) {
  const int nz = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  ContourPolytope P;
  P.n_outcomes = nz;
  for (int z = 0; z < nz; ++z) P.ground.push_back(z);
  HalfspaceCut cut;
  for (int z = 0; z < nz; ++z) {
    cut.coeff.push_back(Rational(static_cast<long>(rng() % 7)));
  }
  cut.bound = Rational(3);
  P.cut = cut;
  for (auto _ : state) {
    benchmark::DoNotOptimize(vertices(P));
  }
}
BENCHMARK(BM_CutSimplexVertices)->Arg(4)->Arg(8)->Arg(16);

void BM_HalfspaceContainment(benchmark::State& state) {
  std::mt19937_64 rng(2);
  Environment env = RandomModel::environment(rng, 3, 2, 4);
  std::vector<int> all(env.num_outcomes());
  for (int z = 0; z < env.num_outcomes(); ++z) all[z] = z;
  Lottery alpha = RandomModel::lottery(rng, env, 4);
  ContourPolytope P = lower_contour_Y(env, 0, 0, alpha, all);
  std::vector<Rational> c;
  for (int z = 0; z < env.num_outcomes(); ++z) {
    c.push_back(env.utility(1, 0, z));
  }
  Rational b = expected_utility(env, 1, 0, alpha);
  for (auto _ : state) {
    benchmark::DoNotOptimize(contains_in_halfspace(P, c, b));
  }
}
BENCHMARK(BM_HalfspaceContainment);

void BM_DecomposeInterior(benchmark::State& state) {
  std::mt19937_64 rng(3);
  Environment env = RandomModel::environment(rng, 3, 1, 4, 3, 4);
  std::vector<int> E(env.num_outcomes());
  for (int z = 0; z < env.num_outcomes(); ++z) E[z] = z;
  Lottery gamma = unif(env, E);
  Lottery eta = RandomModel::lottery(rng, env, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose_interior(gamma, eta, E));
  }
}
BENCHMARK(BM_DecomposeInterior);

}  // namespace
