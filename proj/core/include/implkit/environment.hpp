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

#ifndef IMPLKIT_ENVIRONMENT_HPP_
#define IMPLKIT_ENVIRONMENT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "implkit/rational.hpp"

namespace implkit {

// Probability vector over the full outcome list of an environment.  Entries
// are exact; a lottery is valid when all entries are >= 0 and sum to 1.
struct Lottery {
  std::vector<Rational> p;

  std::vector<int> support() const;
  bool is_valid() const;

  friend bool operator==(const Lottery& a, const Lottery& b) {
    return a.p == b.p;
  }
};

// Social choice function: one outcome index per state.
struct Scf {
  std::vector<int> choice;
};

// Social choice correspondence: a nonempty, sorted outcome-index set per
// state.
struct Scc {
  std::vector<std::vector<int>> choice;

  bool single_valued() const {
    for (const auto& v : choice) {
      if (v.size() != 1) return false;
    }
    return true;
  }
  Scf as_scf() const {
    Scf f;
    for (const auto& v : choice) f.choice.push_back(v.front());
    return f;
  }
};

inline Scc scc_from_scf(const Scf& f) {
  Scc F;
  for (int z : f.choice) F.choice.push_back({z});
  return F;
}

// A finite cardinal environment: agents, states, outcomes, and an exact
// utility table u[i][theta][z].  State and outcome identifiers are strings;
// the declared order fixes all internal indices and tie-breaking downstream.
class Environment {
 public:
  Environment() = default;
  Environment(int agents, std::vector<std::string> states,
              std::vector<std::string> outcomes)
      : agents_(agents),
        states_(std::move(states)),
        outcomes_(std::move(outcomes)),
        utility_(static_cast<std::size_t>(agents) * states_.size() *
                 outcomes_.size()) {}

  int agents() const { return agents_; }
  int num_states() const { return static_cast<int>(states_.size()); }
  int num_outcomes() const { return static_cast<int>(outcomes_.size()); }

  const std::vector<std::string>& state_names() const { return states_; }
  const std::vector<std::string>& outcome_names() const { return outcomes_; }
  const std::string& state_name(int t) const { return states_[t]; }
  const std::string& outcome_name(int z) const { return outcomes_[z]; }

  int state_index(const std::string& name) const;
  int outcome_index(const std::string& name) const;

  const Rational& utility(int i, int theta, int z) const {
    return utility_[flat(i, theta, z)];
  }
  void set_utility(int i, int theta, int z, Rational u) {
    utility_[flat(i, theta, z)] = std::move(u);
  }

  std::vector<int> argmax_utility(int i, int theta) const;
  std::vector<int> argmin_utility(int i, int theta) const;

  // argmax of u_i^theta restricted to a nonempty outcome subset.
  std::vector<int> argmax_in(int i, int theta,
                             const std::vector<int>& universe) const;
  std::vector<int> argmin_in(int i, int theta,
                             const std::vector<int>& universe) const;

 private:
  std::size_t flat(int i, int theta, int z) const {
    return (static_cast<std::size_t>(i) * states_.size() + theta) *
               outcomes_.size() +
           z;
  }

  int agents_ = 0;
  std::vector<std::string> states_;
  std::vector<std::string> outcomes_;
  std::vector<Rational> utility_;
};

enum class ValidationCode {
  kOk,
  kAgentCountTooSmall,
  kTrivialScf,
  kEmptySccValue,
  kMissingUtility,
  kEmptyStateSet,
  kEmptyOutcomeSet,
  kBadIndex,
};

struct ValidationResult {
  bool ok = true;
  ValidationCode code = ValidationCode::kOk;
  std::string where;
};

const char* validation_code_name(ValidationCode c);

ValidationResult validate(const Environment& env);
ValidationResult validate(const Environment& env, const Scf& f);
ValidationResult validate(const Environment& env, const Scc& F);

// U_i^theta(y): exact dot product of y with u_i^theta.
Rational expected_utility(const Environment& env, int i, int theta,
                          const Lottery& y);

// Uniform lottery on a nonempty outcome subset; support is exactly `ground`.
Lottery unif(const Environment& env, const std::vector<int>& ground);

// Degenerate lottery at outcome z.
Lottery unit_lottery(const Environment& env, int z);

}  // namespace implkit

#endif  // IMPLKIT_ENVIRONMENT_HPP_
