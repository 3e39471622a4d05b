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

#ifndef IMPLKIT_FUZZ_HPP_
#define IMPLKIT_FUZZ_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "implkit/equilibrium.hpp"

namespace implkit {

// Small deterministic generators shared by the fuzzer and the test suites.
// All draws go through an explicit engine so instances replay from a seed.
struct RandomModel {
  // I agents, grid utilities {0..grid_max}, uniform over sizes.
  static Environment environment(std::mt19937_64& rng, int agents,
                                 int max_states, int max_outcomes,
                                 int grid_max = 3, int min_outcomes = 2);
  // |f(Theta)| >= 2 enforced by resampling (needs >= 2 outcomes).
  static Scf scf(std::mt19937_64& rng, const Environment& env);
  static Scc scc(std::mt19937_64& rng, const Environment& env);
  static Mechanism mechanism(std::mt19937_64& rng, const Environment& env,
                             int max_msgs, int max_denominator = 4);
  static Lottery lottery(std::mt19937_64& rng, const Environment& env,
                         int max_denominator);
};

struct FuzzConfig {
  int count = 200;
  std::uint64_t seed = 0;
  int max_msgs = 3;
  int max_outcomes = 3;
  int max_states = 3;
  int xi_cap = kDefaultXiCap;
  bool check_rationalizability = true;
};

struct FuzzViolation {
  int instance = -1;
  std::uint64_t instance_seed = 0;
  std::string clause;  // which assertion failed
  std::string detail;
};

struct FuzzReport {
  int instances = 0;
  int with_nonempty_pne = 0;   // F_M total on states
  int single_valued = 0;
  long supports_checked = 0;
  std::vector<FuzzViolation> violations;
};

// Samples (environment, mechanism) pairs and asserts the necessity
// consequences on each: the equilibrium correspondence passes the A-B
// uniform check, its single-valued restriction passes the SCF check, all
// outcome supports live inside the effective universe, and the
// rationalizable correspondence passes the A-B uniform check.
FuzzReport necessity_fuzz(const FuzzConfig& config);

std::uint64_t instance_seed(std::uint64_t master, int index);

}  // namespace implkit

#endif  // IMPLKIT_FUZZ_HPP_
