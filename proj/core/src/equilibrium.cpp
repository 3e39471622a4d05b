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

#include "implkit/equilibrium.hpp"

#include <algorithm>
#include <set>

#include "implkit/lp.hpp"

namespace implkit {

namespace {

bool next_profile(std::vector<int>& profile, const Mechanism& mech) {
  int carry = mech.agents() - 1;
  while (carry >= 0) {
    if (++profile[carry] <
        static_cast<int>(mech.messages[carry].size())) {
      return true;
    }
    profile[carry] = 0;
    --carry;
  }
  return false;
}

}  // namespace

bool is_pure_ne(const Mechanism& mech, const Environment& env, int theta,
                const std::vector<int>& profile) {
  std::vector<int> probe = profile;
  for (int i = 0; i < mech.agents(); ++i) {
    Rational stay = expected_utility(env, i, theta, mech.outcome(profile));
    for (int mi = 0; mi < static_cast<int>(mech.messages[i].size()); ++mi) {
      probe[i] = mi;
      if (expected_utility(env, i, theta, mech.outcome(probe)) > stay) {
        return false;
      }
    }
    probe[i] = profile[i];
  }
  return true;
}

std::vector<std::vector<int>> pure_ne(const Mechanism& mech,
                                      const Environment& env, int theta) {
  if (mech.profile_count() > kMaxEnumerableProfiles) {
    throw Error(Errc::kMechanismTooLarge,
                "profile space exceeds the enumeration guard");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> profile(mech.agents(), 0);
  do {
    if (is_pure_ne(mech, env, theta, profile)) out.push_back(profile);
  } while (next_profile(profile, mech));
  return out;
}

ImplementedCorrespondence implemented_correspondence(const Mechanism& mech,
                                                     const Environment& env) {
  ImplementedCorrespondence result;
  result.F.choice.resize(env.num_states());
  for (int t = 0; t < env.num_states(); ++t) {
    std::set<int> supp;
    for (const auto& profile : pure_ne(mech, env, t)) {
      for (int z : mech.outcome(profile).support()) supp.insert(z);
    }
    if (supp.empty()) {
      result.implementing = false;
      return result;
    }
    result.F.choice[t].assign(supp.begin(), supp.end());
  }
  result.implementing = true;
  return result;
}

namespace {

// m_i is a best reply (within all of M_i) to some joint belief over the
// opponents' surviving profiles.
bool has_supporting_belief(const Mechanism& mech, const Environment& env,
                           int theta, int i, int mi,
                           const std::vector<std::vector<int>>& survivors) {
  // Enumerate opponent profiles drawn from the survivor sets.
  std::vector<int> others;
  for (int j = 0; j < mech.agents(); ++j) {
    if (j != i) others.push_back(j);
  }
  std::vector<std::vector<int>> opp_profiles;
  std::vector<std::size_t> idx(others.size(), 0);
  while (true) {
    std::vector<int> profile(mech.agents(), 0);
    for (std::size_t k = 0; k < others.size(); ++k) {
      profile[others[k]] = survivors[others[k]][idx[k]];
    }
    opp_profiles.push_back(std::move(profile));
    int carry = static_cast<int>(others.size()) - 1;
    while (carry >= 0) {
      if (++idx[carry] < survivors[others[carry]].size()) break;
      idx[carry] = 0;
      --carry;
    }
    if (carry < 0) break;
  }

  // One inequality row per alternative message: the expected margin of mi
  // over mi' must be nonnegative under the belief.
  std::vector<std::vector<Rational>> A;
  for (int alt = 0; alt < static_cast<int>(mech.messages[i].size()); ++alt) {
    if (alt == mi) continue;
    std::vector<Rational> row;
    row.reserve(opp_profiles.size());
    for (auto& profile : opp_profiles) {
      profile[i] = mi;
      Rational u_mi = expected_utility(env, i, theta, mech.outcome(profile));
      profile[i] = alt;
      Rational u_alt = expected_utility(env, i, theta, mech.outcome(profile));
      row.push_back(u_mi - u_alt);
    }
    A.push_back(std::move(row));
  }
  return lp_feasible(A, static_cast<int>(opp_profiles.size()));
}

}  // namespace

std::vector<std::vector<int>> rationalizable_set(const Mechanism& mech,
                                                 const Environment& env,
                                                 int theta) {
  if (mech.profile_count() > kMaxEnumerableProfiles) {
    throw Error(Errc::kMechanismTooLarge,
                "profile space exceeds the enumeration guard");
  }
  std::vector<std::vector<int>> S(mech.agents());
  std::size_t round_bound = 1;
  for (int i = 0; i < mech.agents(); ++i) {
    S[i].resize(mech.messages[i].size());
    for (std::size_t k = 0; k < S[i].size(); ++k) S[i][k] = static_cast<int>(k);
    round_bound += S[i].size();
  }
  for (std::size_t round = 0; round <= round_bound; ++round) {
    std::vector<std::vector<int>> next(mech.agents());
    for (int i = 0; i < mech.agents(); ++i) {
      // Fresh best replies to beliefs over survivors; not intersected with
      // the previous round.
      for (int mi = 0; mi < static_cast<int>(mech.messages[i].size()); ++mi) {
        if (has_supporting_belief(mech, env, theta, i, mi, S)) {
          next[i].push_back(mi);
        }
      }
      if (!std::includes(S[i].begin(), S[i].end(), next[i].begin(),
                         next[i].end())) {
        throw Error(Errc::kInternalMismatch,
                    "elimination rounds must shrink monotonically");
      }
    }
    if (next == S) return S;
    S = std::move(next);
  }
  throw Error(Errc::kInternalMismatch,
              "elimination exceeded the round bound");
}

Scc rationalizable_correspondence(const Mechanism& mech,
                                  const Environment& env) {
  Scc R;
  R.choice.resize(env.num_states());
  for (int t = 0; t < env.num_states(); ++t) {
    std::vector<std::vector<int>> S = rationalizable_set(mech, env, t);
    std::set<int> supp;
    std::vector<std::size_t> idx(mech.agents(), 0);
    while (true) {
      std::vector<int> profile(mech.agents());
      for (int i = 0; i < mech.agents(); ++i) profile[i] = S[i][idx[i]];
      for (int z : mech.outcome(profile).support()) supp.insert(z);
      int carry = mech.agents() - 1;
      while (carry >= 0) {
        if (++idx[carry] < S[carry].size()) break;
        idx[carry] = 0;
        --carry;
      }
      if (carry < 0) break;
    }
    R.choice[t].assign(supp.begin(), supp.end());
  }
  return R;
}

DeviationCheck lemma11_deviation_check(const Mechanism& mech,
                                       const Environment& env, const Scc& F_M,
                                       int i, int theta,
                                       const std::vector<int>& profile,
                                       int xi_cap) {
  MaxSetCache cache(env, F_M);
  DeviationCheck result;
  std::vector<int> base = cache.base_set(i, theta);
  bool antecedent = cache.f_theta_in_zstar_argmin(i, theta) &&
                    !base.empty() && cache.is_i_zstar_max(base, i) &&
                    !cache.xi_family(i, theta, xi_cap).empty();
  if (!antecedent) {
    result.skipped = true;
    return result;
  }
  std::vector<int> bound = cache.xi_union_ground(i, theta, xi_cap);
  std::vector<int> probe = profile;
  for (int mi = 0; mi < static_cast<int>(mech.messages[i].size()); ++mi) {
    probe[i] = mi;
    for (int z : mech.outcome(probe).support()) {
      if (!std::binary_search(bound.begin(), bound.end(), z)) {
        result.holds = false;
        return result;
      }
    }
  }
  return result;
}

}  // namespace implkit
