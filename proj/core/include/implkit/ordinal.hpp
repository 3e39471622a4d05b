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

#ifndef IMPLKIT_ORDINAL_HPP_
#define IMPLKIT_ORDINAL_HPP_

#include <string>
#include <utility>
#include <vector>

#include "implkit/environment.hpp"

namespace implkit {

// A finite ordinal environment: per (agent, state) a weak order on outcomes
// given as indifference classes, best class first.  Classes partition the
// outcome list.
struct OrdinalEnvironment {
  int agents = 0;
  std::vector<std::string> states;
  std::vector<std::string> outcomes;
  // classes[i][theta] = list of indifference classes (outcome indices),
  // best first.
  std::vector<std::vector<std::vector<std::vector<int>>>> classes_by_agent;

  int num_states() const { return static_cast<int>(states.size()); }
  int num_outcomes() const { return static_cast<int>(outcomes.size()); }
  const std::vector<std::vector<int>>& classes(int i, int theta) const {
    return classes_by_agent[i][theta];
  }
};

ValidationResult validate(const OrdinalEnvironment& oenv);

// r(z) = 1 + number of strictly worse indifference classes; equal ranks iff
// indifferent.
std::vector<int> ranks(const OrdinalEnvironment& oenv, int i, int theta);

// Cardinal environment whose utilities are the ranks.  Represents the
// ordinal environment exactly.
Environment rank_representation(const OrdinalEnvironment& oenv);

// Extracts the weak orders of a cardinal environment.
OrdinalEnvironment ordinalize(const Environment& env);

// True iff u_i^theta(z) >= u_i^theta(z') exactly when z is weakly preferred
// in the ordinal environment, for all triples.
bool represents(const OrdinalEnvironment& oenv, const Environment& env);

// Both ratio bounds for a non-extreme outcome z:
//   low  = (u(z) - max over SL) / (max over SU - max over SL)
//   high = (u(z) - min over SL) / (min over SU - min over SL)
// Throws ExtremeOutcome when z is a top or bottom outcome of u_i^theta.
std::pair<Rational, Rational> rho_bounds(const Environment& env, int i,
                                         int theta, int z);

struct BracketingReps {
  Environment u_hat;    // lower contour sets shrink: L(z, u_hat) inside L(z, target)
  Environment u_tilde;  // lower contour sets grow:   L(z, target) inside L(z, u_tilde)
  int n = 0;            // the scale exponent that satisfied the ratio bounds
};

// Builds the pair (u_hat, u_tilde) of rational representations bracketing a
// rational-valued target representation, by scanning n = 1, 2, ... until the
// ratio-bound inequalities hold, then verifying the lottery-set containments
// by vertex checks.
BracketingReps bracketing_reps(const OrdinalEnvironment& oenv,
                               const Environment& target);

}  // namespace implkit

#endif  // IMPLKIT_ORDINAL_HPP_
