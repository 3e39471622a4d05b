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

#ifndef IMPLKIT_EQUILIBRIUM_HPP_
#define IMPLKIT_EQUILIBRIUM_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "implkit/max_sets.hpp"
#include "implkit/mechanism.hpp"

namespace implkit {

inline constexpr std::size_t kMaxEnumerableProfiles = 1000000;

// All pure-strategy Nash equilibria at theta, by exhaustive enumeration of
// message profiles; throws MechanismTooLarge past the guard.
std::vector<std::vector<int>> pure_ne(const Mechanism& mech,
                                      const Environment& env, int theta);

// Single-profile test used where full enumeration is not needed.
bool is_pure_ne(const Mechanism& mech, const Environment& env, int theta,
                const std::vector<int>& profile);

struct ImplementedCorrespondence {
  bool implementing = false;  // false when some state has no equilibrium
  Scc F;                      // defined only when implementing
};

// F_M(theta): union of outcome supports over equilibria; NonImplementing
// when some state has none.
ImplementedCorrespondence implemented_correspondence(const Mechanism& mech,
                                                     const Environment& env);

// Per-agent message sets surviving the best-reply-to-some-belief operator:
// the largest fixed point, reached by downward iteration from the full
// space.  Beliefs are joint distributions over the opponents' surviving
// profiles; membership is decided by exact LP feasibility.
std::vector<std::vector<int>> rationalizable_set(const Mechanism& mech,
                                                 const Environment& env,
                                                 int theta);

// Union of outcome supports over all surviving pure profiles, per state.
Scc rationalizable_correspondence(const Mechanism& mech,
                                  const Environment& env);

struct DeviationCheck {
  bool skipped = false;  // the antecedent did not apply
  bool holds = true;
};

// Unilateral-deviation support inclusion at an equilibrium profile, under
// the argmin/max-set/Xi antecedent for agent i at theta.
DeviationCheck lemma11_deviation_check(const Mechanism& mech,
                                       const Environment& env, const Scc& F_M,
                                       int i, int theta,
                                       const std::vector<int>& profile,
                                       int xi_cap = kDefaultXiCap);

}  // namespace implkit

#endif  // IMPLKIT_EQUILIBRIUM_HPP_
