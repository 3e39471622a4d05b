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

#include "implkit/environment.hpp"

#include <algorithm>
#include <set>

namespace implkit {

std::vector<int> Lottery::support() const {
  std::vector<int> s;
  for (int z = 0; z < static_cast<int>(p.size()); ++z) {
    if (p[z].sign() > 0) s.push_back(z);
  }
  return s;
}

bool Lottery::is_valid() const {
  Rational sum;
  for (const auto& q : p) {
    if (q.sign() < 0) return false;
    sum += q;
  }
  return sum == Rational(1);
}

int Environment::state_index(const std::string& name) const {
  auto it = std::find(states_.begin(), states_.end(), name);
  return it == states_.end() ? -1 : static_cast<int>(it - states_.begin());
}

int Environment::outcome_index(const std::string& name) const {
  auto it = std::find(outcomes_.begin(), outcomes_.end(), name);
  return it == outcomes_.end() ? -1 : static_cast<int>(it - outcomes_.begin());
}

std::vector<int> Environment::argmax_in(int i, int theta,
                                        const std::vector<int>& universe) const {
  std::vector<int> best;
  for (int z : universe) {
    if (best.empty()) {
      best.push_back(z);
    } else {
      const Rational& b = utility(i, theta, best.front());
      const Rational& u = utility(i, theta, z);
      if (u > b) {
        best.assign(1, z);
      } else if (u == b) {
        best.push_back(z);
      }
    }
  }
  return best;
}

std::vector<int> Environment::argmin_in(int i, int theta,
                                        const std::vector<int>& universe) const {
  std::vector<int> best;
  for (int z : universe) {
    if (best.empty()) {
      best.push_back(z);
    } else {
      const Rational& b = utility(i, theta, best.front());
      const Rational& u = utility(i, theta, z);
      if (u < b) {
        best.assign(1, z);
      } else if (u == b) {
        best.push_back(z);
      }
    }
  }
  return best;
}

std::vector<int> Environment::argmax_utility(int i, int theta) const {
  std::vector<int> all(num_outcomes());
  for (int z = 0; z < num_outcomes(); ++z) all[z] = z;
  return argmax_in(i, theta, all);
}

std::vector<int> Environment::argmin_utility(int i, int theta) const {
  std::vector<int> all(num_outcomes());
  for (int z = 0; z < num_outcomes(); ++z) all[z] = z;
  return argmin_in(i, theta, all);
}

const char* validation_code_name(ValidationCode c) {
  switch (c) {
    case ValidationCode::kOk: return "Ok";
    case ValidationCode::kAgentCountTooSmall: return "AgentCountTooSmall";
    case ValidationCode::kTrivialScf: return "TrivialScf";
    case ValidationCode::kEmptySccValue: return "EmptySccValue";
    case ValidationCode::kMissingUtility: return "MissingUtility";
    case ValidationCode::kEmptyStateSet: return "EmptyStateSet";
    case ValidationCode::kEmptyOutcomeSet: return "EmptyOutcomeSet";
    case ValidationCode::kBadIndex: return "BadIndex";
  }
  return "Unknown";
}

ValidationResult validate(const Environment& env) {
  if (env.agents() < 3) {
    return {false, ValidationCode::kAgentCountTooSmall,
            "I=" + std::to_string(env.agents())};
  }
  if (env.num_states() == 0) {
    return {false, ValidationCode::kEmptyStateSet, "states"};
  }
  if (env.num_outcomes() == 0) {
    return {false, ValidationCode::kEmptyOutcomeSet, "outcomes"};
  }
  return {};
}

ValidationResult validate(const Environment& env, const Scf& f) {
  ValidationResult base = validate(env);
  if (!base.ok) return base;
  if (static_cast<int>(f.choice.size()) != env.num_states()) {
    return {false, ValidationCode::kMissingUtility, "scf not total"};
  }
  std::set<int> range;
  for (int t = 0; t < env.num_states(); ++t) {
    int z = f.choice[t];
    if (z < 0 || z >= env.num_outcomes()) {
      return {false, ValidationCode::kBadIndex, "scf at " + env.state_name(t)};
    }
    range.insert(z);
  }
  if (range.size() < 2) {
    return {false, ValidationCode::kTrivialScf, "|f(Theta)| < 2"};
  }
  return {};
}

ValidationResult validate(const Environment& env, const Scc& F) {
  ValidationResult base = validate(env);
  if (!base.ok) return base;
  if (static_cast<int>(F.choice.size()) != env.num_states()) {
    return {false, ValidationCode::kMissingUtility, "scc not total"};
  }
  for (int t = 0; t < env.num_states(); ++t) {
    if (F.choice[t].empty()) {
      return {false, ValidationCode::kEmptySccValue,
              "F(" + env.state_name(t) + ")"};
    }
    for (int z : F.choice[t]) {
      if (z < 0 || z >= env.num_outcomes()) {
        return {false, ValidationCode::kBadIndex,
                "scc at " + env.state_name(t)};
      }
    }
  }
  return {};
}

Rational expected_utility(const Environment& env, int i, int theta,
                          const Lottery& y) {
  Rational sum;
  for (int z = 0; z < env.num_outcomes(); ++z) {
    if (!y.p[z].is_zero()) sum += y.p[z] * env.utility(i, theta, z);
  }
  return sum;
}

Lottery unif(const Environment& env, const std::vector<int>& ground) {
  if (ground.empty()) throw Error(Errc::kEmptySet, "unif of empty set");
  Lottery y;
  y.p.assign(env.num_outcomes(), Rational(0));
  Rational w(1, static_cast<long>(ground.size()));
  for (int z : ground) y.p[z] = w;
  return y;
}

Lottery unit_lottery(const Environment& env, int z) {
  Lottery y;
  y.p.assign(env.num_outcomes(), Rational(0));
  y.p[z] = Rational(1);
  return y;
}

}  // namespace implkit
