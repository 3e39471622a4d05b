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

#include "implkit/checks.hpp"
#include "implkit/fuzz.hpp"

namespace {

using namespace implkit;

Environment multi_state_env(std::mt19937_64& rng) {
  while (true) {
    Environment env = RandomModel::environment(rng, 3, 3, 4);
    if (env.num_states() == 3) return env;
  }
}

void BM_CheckLhatScf(benchmark::State& state) {
  std::mt19937_64 rng(4);
  Environment env = multi_state_env(rng);
  Scf f = RandomModel::scf(rng, env);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_lhat_scf(env, f));
  }
}
BENCHMARK(BM_CheckLhatScf);

void BM_CheckLhatAbUniform(benchmark::State& state) {
  std::mt19937_64 rng(5);
  Environment env = multi_state_env(rng);
  Scc F = RandomModel::scc(rng, env);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_lhat_AB_uniform(env, F));
  }
}
BENCHMARK(BM_CheckLhatAbUniform);

void BM_StrongSetMonotonicity(benchmark::State& state) {
  std::mt19937_64 rng(6);
  Environment env = multi_state_env(rng);
  OrdinalEnvironment oenv = ordinalize(env);
  Scc F = RandomModel::scc(rng, env);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_strong_set_monotonicity(oenv, F));
  }
}
BENCHMARK(BM_StrongSetMonotonicity);

}  // namespace
