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

#ifndef IMPLKIT_TESTS_SUPPORT_BUILDERS_HPP_
#define IMPLKIT_TESTS_SUPPORT_BUILDERS_HPP_

#include <string>
#include <vector>

#include "implkit/environment.hpp"

namespace implkit::testing {

inline Environment make_env(int agents, std::vector<std::string> states,
                            std::vector<std::string> outcomes) {
  return Environment(agents, std::move(states), std::move(outcomes));
}

// Utilities for one (agent, state) given per-outcome in declared order.
inline void set_u(Environment& env, int i, int theta,
                  const std::vector<long>& values) {
  for (int z = 0; z < env.num_outcomes(); ++z) {
    env.set_utility(i, theta, z, Rational(values[z]));
  }
}

// Same utilities for every agent at one state.
inline void set_u_all(Environment& env, int theta,
                      const std::vector<long>& values) {
  for (int i = 0; i < env.agents(); ++i) set_u(env, i, theta, values);
}

// Two states with utilities opposed across states; the monotonicity
// antecedents fail in both directions.
inline Environment env_a() {
  Environment env = make_env(3, {"alpha", "beta"}, {"a", "b"});
  set_u_all(env, 0, {1, 0});
  set_u_all(env, 1, {0, 1});
  return env;
}

inline Scf env_a_scf() { return Scf{{0, 1}}; }

// Identical utilities at both states but a state-dependent choice; every
// monotonicity condition fails with witness (alpha, beta).
inline Environment env_id() {
  Environment env = make_env(3, {"alpha", "beta"}, {"a", "b"});
  set_u_all(env, 0, {1, 0});
  set_u_all(env, 1, {1, 0});
  return env;
}

inline Scf env_id_scf() { return Scf{{0, 1}}; }

// One state; agent 1 bottoms out at the chosen outcome while everyone else
// is indifferent, so {a} is a 1-max set.
inline Environment env_c() {
  Environment env = make_env(3, {"alpha"}, {"a", "b"});
  set_u(env, 0, 0, {0, 1});
  set_u(env, 1, 0, {1, 1});
  set_u(env, 2, 0, {1, 1});
  return env;
}

// env_c duplicated to a second state with a different choice there.
inline Environment env_c_ext() {
  Environment env = make_env(3, {"alpha", "beta"}, {"a", "b"});
  for (int t = 0; t < 2; ++t) {
    set_u(env, 0, t, {0, 1});
    set_u(env, 1, t, {1, 1});
    set_u(env, 2, t, {1, 1});
  }
  return env;
}

inline Scf env_c_ext_scf() { return Scf{{0, 1}}; }

inline Lottery make_lottery(const Environment& env,
                            const std::vector<std::string>& fractions) {
  Lottery y;
  for (const auto& f : fractions) y.p.push_back(Rational::parse(f));
  y.p.resize(env.num_outcomes(), Rational(0));
  return y;
}

}  // namespace implkit::testing

#endif  // IMPLKIT_TESTS_SUPPORT_BUILDERS_HPP_
