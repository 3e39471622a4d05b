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

#ifndef IMPLKIT_CANONICAL_HPP_
#define IMPLKIT_CANONICAL_HPP_

#include <string>
#include <variant>
#include <vector>

#include "implkit/checks.hpp"
#include "implkit/max_sets.hpp"
#include "implkit/mechanism.hpp"

namespace implkit {

// Optimal challenge lotteries: phi[j][theta][theta'] maximizes U_j^{theta'}
// over the refined lower-contour set at (f(theta), theta), with the attained
// value alongside.
struct ChallengeScheme {
  int agents = 0;
  int states = 0;
  std::vector<Lottery> lotteries;  // [j][theta][theta'] flattened
  std::vector<Rational> values;

  const Lottery& at(int j, int theta, int theta_prime) const {
    return lotteries[(static_cast<std::size_t>(j) * states + theta) * states +
                     theta_prime];
  }
  const Rational& value_at(int j, int theta, int theta_prime) const {
    return values[(static_cast<std::size_t>(j) * states + theta) * states +
                  theta_prime];
  }
};

// The constants of the third preliminary construction: a small weight and an
// anchor lottery keeping every mixture with the reachable-set simplex inside
// the refined lower-contour set.
struct EpsilonY {
  Rational eps;  // in (0, 1)
  Lottery y;
};

struct CanonicalMessage {
  int theta = 0;
  int k2 = 1;
  int k3 = 1;
  std::vector<int> gamma;  // per state: a chosen outcome of Gamma_i(theta)
  int b = 0;               // an outcome of the base set

  friend bool operator==(const CanonicalMessage& a, const CanonicalMessage& b) {
    return a.theta == b.theta && a.k2 == b.k2 && a.k3 == b.k3 &&
           a.gamma == b.gamma && a.b == b.b;
  }
};

enum class CanonicalVariant { kScf, kAB };

// The truncated three-case mechanism.  Integer announcements live in
// {1..K}; gamma messages carry one pick per state, the payoff-relevant
// compression of the full per-subset selector.
class CanonicalMechanism {
 public:
  CanonicalVariant variant = CanonicalVariant::kScf;
  int truncation = 2;  // K
  Environment env;
  Scc F;                          // single-valued in the SCF variant
  std::vector<int> base;          // Z for SCF, Z* for A-B
  ChallengeScheme challenges;     // phi or psi
  std::vector<EpsilonY> eps_y;    // [j][theta] flattened
  std::vector<std::vector<int>> gamma_sets;  // [j][theta] -> outcome set

  const EpsilonY& eps_y_at(int j, int theta) const {
    return eps_y[static_cast<std::size_t>(j) * env.num_states() + theta];
  }
  const std::vector<int>& gamma_set(int j, int theta) const {
    return gamma_sets[static_cast<std::size_t>(j) * env.num_states() + theta];
  }

  // Case routing and the exact flattened outcome lottery.
  Lottery outcome(const std::vector<CanonicalMessage>& m) const;

  // The profile (theta, k2=1, k3=1, first picks) that triggers consensus.
  std::vector<CanonicalMessage> truth_profile(int theta) const;

  // All messages of one agent, in deterministic order.
  std::vector<CanonicalMessage> messages_for_agent(int i) const;
  std::string message_name(int i, const CanonicalMessage& m) const;

  // Expands message tuples and the outcome table into a plain mechanism;
  // throws MechanismTooLarge past the enumeration guard.
  Mechanism to_mechanism(std::size_t max_profiles = 1000000) const;
};

ChallengeScheme build_phi(const Environment& env, const Scf& f);
ChallengeScheme build_psi(const Environment& env, const Scc& F,
                          int xi_cap = kDefaultXiCap);

// Lemma-3 constants for one (agent, state); the returned pair is re-verified
// against every vertex of the reachable-set simplex before returning.
EpsilonY build_epsilon_y(const Environment& env, const Scf& f, int j,
                         int theta);

CanonicalMechanism build_canonical_scf(const Environment& env, const Scf& f,
                                       int K);
CanonicalMechanism build_canonical_AB(const Environment& env, const Scc& F,
                                      int K, int xi_cap = kDefaultXiCap);

Lottery outcome_g(const CanonicalMechanism& mech,
                  const std::vector<CanonicalMessage>& m);

// No unilateral deviation from the truth profile at theta improves the
// deviator's exact expected utility.
bool truth_profile_is_pne(const CanonicalMechanism& mech, int theta);

struct WhistleBlowerEntry {
  int theta;       // the falsely agreed state
  int theta_star;  // the true state
  int agent;
  Lottery vertex;  // a challenge lottery strictly better than f(theta)
};

// The four analytic facts behind the sufficiency argument, verified without
// equilibrium enumeration.
struct Certificate {
  std::vector<WhistleBlowerEntry> whistle_blowers;
};

struct Refutation {
  std::string clause;  // "C1".."C4"
  CheckWitness witness;
};

std::variant<Certificate, Refutation> certify_scf(const Environment& env,
                                                  const Scf& f);

}  // namespace implkit

#endif  // IMPLKIT_CANONICAL_HPP_
