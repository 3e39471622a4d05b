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

#include "implkit/ordinal.hpp"

#include <algorithm>
#include <map>

#include "implkit/geometry.hpp"

namespace implkit {

ValidationResult validate(const OrdinalEnvironment& oenv) {
  if (oenv.agents < 3) {
    return {false, ValidationCode::kAgentCountTooSmall,
            "I=" + std::to_string(oenv.agents)};
  }
  if (oenv.states.empty()) {
    return {false, ValidationCode::kEmptyStateSet, "states"};
  }
  if (oenv.outcomes.empty()) {
    return {false, ValidationCode::kEmptyOutcomeSet, "outcomes"};
  }
  for (int i = 0; i < oenv.agents; ++i) {
    for (int t = 0; t < oenv.num_states(); ++t) {
      std::vector<char> seen(oenv.num_outcomes(), 0);
      int covered = 0;
      for (const auto& cls : oenv.classes(i, t)) {
        if (cls.empty()) {
          return {false, ValidationCode::kBadIndex, "empty class"};
        }
        for (int z : cls) {
          if (z < 0 || z >= oenv.num_outcomes() || seen[z]) {
            return {false, ValidationCode::kBadIndex,
                    "order of agent " + std::to_string(i + 1) + " at " +
                        oenv.states[t]};
          }
          seen[z] = 1;
          ++covered;
        }
      }
      if (covered != oenv.num_outcomes()) {
        return {false, ValidationCode::kMissingUtility,
                "order of agent " + std::to_string(i + 1) + " at " +
                    oenv.states[t] + " does not partition Z"};
      }
    }
  }
  return {};
}

std::vector<int> ranks(const OrdinalEnvironment& oenv, int i, int theta) {
  const auto& cls = oenv.classes(i, theta);
  const int c = static_cast<int>(cls.size());
  std::vector<int> r(oenv.num_outcomes(), 0);
  for (int k = 0; k < c; ++k) {
    for (int z : cls[k]) r[z] = c - k;  // best class first
  }
  return r;
}

Environment rank_representation(const OrdinalEnvironment& oenv) {
  Environment env(oenv.agents, oenv.states, oenv.outcomes);
  for (int i = 0; i < oenv.agents; ++i) {
    for (int t = 0; t < oenv.num_states(); ++t) {
      std::vector<int> r = ranks(oenv, i, t);
      for (int z = 0; z < oenv.num_outcomes(); ++z) {
        env.set_utility(i, t, z, Rational(r[z]));
      }
    }
  }
  return env;
}

OrdinalEnvironment ordinalize(const Environment& env) {
  OrdinalEnvironment oenv;
  oenv.agents = env.agents();
  oenv.states = env.state_names();
  oenv.outcomes = env.outcome_names();
  oenv.classes_by_agent.assign(
      env.agents(), std::vector<std::vector<std::vector<int>>>(
                        env.num_states()));
  for (int i = 0; i < env.agents(); ++i) {
    for (int t = 0; t < env.num_states(); ++t) {
      std::map<Rational, std::vector<int>> by_value;
      for (int z = 0; z < env.num_outcomes(); ++z) {
        by_value[env.utility(i, t, z)].push_back(z);
      }
      auto& classes = oenv.classes_by_agent[i][t];
      for (auto it = by_value.rbegin(); it != by_value.rend(); ++it) {
        classes.push_back(it->second);
      }
    }
  }
  return oenv;
}

bool represents(const OrdinalEnvironment& oenv, const Environment& env) {
  if (env.agents() != oenv.agents ||
      env.num_states() != oenv.num_states() ||
      env.num_outcomes() != oenv.num_outcomes()) {
    return false;
  }
  for (int i = 0; i < oenv.agents; ++i) {
    for (int t = 0; t < oenv.num_states(); ++t) {
      std::vector<int> r = ranks(oenv, i, t);
      for (int z = 0; z < oenv.num_outcomes(); ++z) {
        for (int w = 0; w < oenv.num_outcomes(); ++w) {
          bool ordinal_geq = r[z] >= r[w];
          bool cardinal_geq = env.utility(i, t, z) >= env.utility(i, t, w);
          if (ordinal_geq != cardinal_geq) return false;
        }
      }
    }
  }
  return true;
}

namespace {

struct Splits {
  Rational max_sl, min_sl, max_su, min_su;
  bool has_sl = false, has_su = false;
};

Splits split_levels(const Environment& env, int i, int theta, int z) {
  Splits s;
  const Rational& uz = env.utility(i, theta, z);
  for (int w = 0; w < env.num_outcomes(); ++w) {
    const Rational& uw = env.utility(i, theta, w);
    if (uw < uz) {
      if (!s.has_sl) {
        s.max_sl = s.min_sl = uw;
        s.has_sl = true;
      } else {
        if (uw > s.max_sl) s.max_sl = uw;
        if (uw < s.min_sl) s.min_sl = uw;
      }
    } else if (uw > uz) {
      if (!s.has_su) {
        s.max_su = s.min_su = uw;
        s.has_su = true;
      } else {
        if (uw > s.max_su) s.max_su = uw;
        if (uw < s.min_su) s.min_su = uw;
      }
    }
  }
  return s;
}

}  // namespace

std::pair<Rational, Rational> rho_bounds(const Environment& env, int i,
                                         int theta, int z) {
  Splits s = split_levels(env, i, theta, z);
  if (!s.has_sl || !s.has_su) {
    throw Error(Errc::kExtremeOutcome,
                env.outcome_name(z) + " is a top or bottom outcome");
  }
  const Rational& uz = env.utility(i, theta, z);
  Rational low = (uz - s.max_sl) / (s.max_su - s.max_sl);
  Rational high = (uz - s.min_sl) / (s.min_su - s.min_sl);
  return {low, high};
}

namespace {

Rational pow10(long e) {
  BigInt v = 1;
  for (long k = 0; k < e; ++k) v *= 10;
  return Rational(v, BigInt(1));
}

Environment scaled_rep(const OrdinalEnvironment& oenv, int n, bool inverted) {
  Environment env(oenv.agents, oenv.states, oenv.outcomes);
  for (int i = 0; i < oenv.agents; ++i) {
    for (int t = 0; t < oenv.num_states(); ++t) {
      std::vector<int> r = ranks(oenv, i, t);
      for (int z = 0; z < oenv.num_outcomes(); ++z) {
        Rational u = Rational(r[z]) * pow10(static_cast<long>(r[z]) * n);
        env.set_utility(i, t, z, inverted ? -(Rational(1) / u) : u);
      }
    }
  }
  return env;
}

// L(z, a) inside L(z, b) for all (i, z): every vertex of the a-polytope
// satisfies the b-inequality.
bool contours_nested(const Environment& a, const Environment& b) {
  std::vector<int> all(a.num_outcomes());
  for (int z = 0; z < a.num_outcomes(); ++z) all[z] = z;
  for (int i = 0; i < a.agents(); ++i) {
    for (int t = 0; t < a.num_states(); ++t) {
      for (int z = 0; z < a.num_outcomes(); ++z) {
        ContourPolytope P =
            lower_contour_Y(a, i, t, unit_lottery(a, z), all);
        std::vector<Rational> target;
        for (int w = 0; w < b.num_outcomes(); ++w) {
          target.push_back(b.utility(i, t, w));
        }
        if (!contains_in_halfspace(P, target, b.utility(i, t, z)).contained) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

BracketingReps bracketing_reps(const OrdinalEnvironment& oenv,
                               const Environment& target) {
  if (!represents(oenv, target)) {
    throw Error(Errc::kValidationError,
                "target is not a representation of the ordinal environment");
  }
  for (int n = 1;; ++n) {
    Environment u_hat = scaled_rep(oenv, n, /*inverted=*/false);
    Environment u_tilde = scaled_rep(oenv, n, /*inverted=*/true);
    bool ok = true;
    for (int i = 0; ok && i < oenv.agents; ++i) {
      for (int t = 0; ok && t < oenv.num_states(); ++t) {
        for (int z = 0; ok && z < oenv.num_outcomes(); ++z) {
          Splits s = split_levels(target, i, t, z);
          if (!s.has_sl || !s.has_su) continue;  // extreme outcomes are free
          auto [target_low, target_high] = rho_bounds(target, i, t, z);
          auto [hat_low, hat_high] = rho_bounds(u_hat, i, t, z);
          auto [tilde_low, tilde_high] = rho_bounds(u_tilde, i, t, z);
          (void)hat_low;
          (void)tilde_high;
          if (!(hat_high < target_low)) ok = false;
          if (ok && !(target_high < tilde_low)) ok = false;
        }
      }
    }
    if (!ok) continue;
    if (contours_nested(u_hat, target) && contours_nested(target, u_tilde)) {
      return {std::move(u_hat), std::move(u_tilde), n};
    }
  }
}

}  // namespace implkit
