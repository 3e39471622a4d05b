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

#include "implkit/equilibrium.hpp"
#include "implkit/fuzz.hpp"
#include "implkit/lp.hpp"

namespace {

using namespace implkit;

void BM_PureNashEnumeration(benchmark::State& state) {
  std::mt19937_64 rng(7);
  Environment env = RandomModel::environment(rng, 3, 3, 3);
  Mechanism mech = RandomModel::mechanism(rng, env, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pure_ne(mech, env, 0));
  }
}
BENCHMARK(BM_PureNashEnumeration);

void BM_RationalizableSet(benchmark::State& state) {
  std::mt19937_64 rng(8);
  Environment env = RandomModel::environment(rng, 3, 2, 3);
  Mechanism mech = RandomModel::mechanism(rng, env, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rationalizable_set(mech, env, 0));
  }
}
BENCHMARK(BM_RationalizableSet);

void BM_LpFeasibility(benchmark::State& state) {
  std::mt19937_64 rng(9);
  const int n = static_cast<int>(state.range(0));
  std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
  for (auto& row : A) {
    for (auto& x : row) {
      x = Rational(static_cast<long>(rng() % 9) - 4,
                   static_cast<long>(rng() % 3) + 1);
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(lp_feasible(A, n));
  }
}
BENCHMARK(BM_LpFeasibility)->Arg(3)->Arg(6)->Arg(9);

void BM_NecessityFuzzInstance(benchmark::State& state) {
  FuzzConfig cfg;
  cfg.count = 1;
  cfg.seed = 10;
  for (auto _ : state) {
    benchmark::DoNotOptimize(necessity_fuzz(cfg));
  }
}
BENCHMARK(BM_NecessityFuzzInstance);

}  // namespace
