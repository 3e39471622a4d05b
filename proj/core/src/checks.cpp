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

#include "implkit/checks.hpp"

#include <algorithm>

namespace implkit {

namespace {

std::vector<Rational> utility_row(const Environment& env, int i, int theta) {
  std::vector<Rational> row;
  row.reserve(env.num_outcomes());
  for (int z = 0; z < env.num_outcomes(); ++z) {
    row.push_back(env.utility(i, theta, z));
  }
  return row;
}

// L_hat(i, theta) within the half-space {u_i^{theta'} . y <= U_i^{theta'}(ref)}.
bool contained_in_target(const Environment& env, const ContourPolytope& poly,
                         int i, int theta_prime, const Lottery& ref) {
  return contains_in_halfspace(poly, utility_row(env, i, theta_prime),
                               expected_utility(env, i, theta_prime, ref))
      .contained;
}

template <typename AntecedentFn, typename ConsequentFn>
CheckReport pair_scan(const Environment& env, std::string condition,
                      const CheckOptions& opt, AntecedentFn antecedent,
                      ConsequentFn consequent) {
  CheckReport report;
  report.condition = std::move(condition);
  for (int t = 0; t < env.num_states(); ++t) {
    for (int tp = 0; tp < env.num_states(); ++tp) {
      if (t == tp) continue;
      ++report.pairs_checked;
      if (!antecedent(t, tp)) continue;
      if (consequent(t, tp)) continue;
      CheckWitness w;
      w.theta = t;
      w.theta_prime = tp;
      report.verdict = Verdict::kFails;
      if (!report.witness) report.witness = w;
      if (!opt.all_witnesses) return report;
      report.all_witnesses.push_back(w);
    }
  }
  return report;
}

}  // namespace

CheckReport check_maskin(const Environment& env, const Scf& f,
                         const CheckOptions& opt) {
  std::vector<int> all(env.num_outcomes());
  for (int z = 0; z < env.num_outcomes(); ++z) all[z] = z;
  return pair_scan(
      env, "maskin", opt,
      [&](int t, int tp) {
        Lottery fz = unit_lottery(env, f.choice[t]);
        for (int i = 0; i < env.agents(); ++i) {
          ContourPolytope L = lower_contour_Y(env, i, t, fz, all);
          if (!contained_in_target(env, L, i, tp, fz)) return false;
        }
        return true;
      },
      [&](int t, int tp) { return f.choice[t] == f.choice[tp]; });
}

CheckReport check_no_veto(const Environment& env, const Scf& f,
                          const CheckOptions& opt) {
  CheckReport report;
  report.condition = "no-veto";
  for (int t = 0; t < env.num_states(); ++t) {
    for (int a = 0; a < env.num_outcomes(); ++a) {
      ++report.pairs_checked;
      int tops = 0;
      for (int i = 0; i < env.agents(); ++i) {
        std::vector<int> amax = env.argmax_utility(i, t);
        if (std::binary_search(amax.begin(), amax.end(), a)) ++tops;
      }
      if (tops < env.agents() - 1) continue;
      if (f.choice[t] == a) continue;
      CheckWitness w;
      w.theta = t;
      w.outcome = a;
      report.verdict = Verdict::kFails;
      if (!report.witness) report.witness = w;
      if (!opt.all_witnesses) return report;
      report.all_witnesses.push_back(w);
    }
  }
  return report;
}

CheckReport check_lhat_scf(const Environment& env, const Scf& f,
                           const CheckOptions& opt) {
  return pair_scan(
      env, "lhat-scf", opt,
      [&](int t, int tp) {
        Lottery fz = unit_lottery(env, f.choice[t]);
        for (int i = 0; i < env.agents(); ++i) {
          LhatSet L = lhat_scf(env, f, i, t);
          if (!contained_in_target(env, L.poly, i, tp, fz)) return false;
        }
        return true;
      },
      [&](int t, int tp) { return f.choice[t] == f.choice[tp]; });
}

CheckReport check_lhat_EF(const Environment& env, const Scc& F,
                          const CheckOptions& opt) {
  CheckReport report;
  report.condition = "lhat-ef";
  std::vector<int> all(env.num_outcomes());
  for (int z = 0; z < env.num_outcomes(); ++z) all[z] = z;
  // First conjunct: Z must not be an i-max set for any agent.
  for (int t = 0; t < env.num_states(); ++t) {
    if (is_i_theta_max_set(env, all, 0, t)) {
      CheckWitness w;
      w.theta = t;
      w.note = "Z is an i-max set at this state";
      report.verdict = Verdict::kFails;
      report.witness = w;
      if (!opt.all_witnesses) return report;
      report.all_witnesses.push_back(w);
    }
  }
  // Second conjunct: pointwise monotonicity with the E-F refinement.
  for (int t = 0; t < env.num_states(); ++t) {
    for (int tp = 0; tp < env.num_states(); ++tp) {
      if (t == tp) continue;
      for (int a : F.choice[t]) {
        ++report.pairs_checked;
        Lottery az = unit_lottery(env, a);
        bool antecedent = true;
        for (int i = 0; i < env.agents() && antecedent; ++i) {
          LhatSet L = lhat_scc_EF(env, F, i, t, a);
          if (!contained_in_target(env, L.poly, i, tp, az)) {
            antecedent = false;
          }
        }
        if (!antecedent) continue;
        if (std::binary_search(F.choice[tp].begin(), F.choice[tp].end(), a)) {
          continue;
        }
        CheckWitness w;
        w.theta = t;
        w.theta_prime = tp;
        w.outcome = a;
        report.verdict = Verdict::kFails;
        if (!report.witness) report.witness = w;
        if (!opt.all_witnesses) return report;
        report.all_witnesses.push_back(w);
      }
    }
  }
  return report;
}

CheckReport check_lhat_AB_uniform(const Environment& env, const Scc& F,
                                  const CheckOptions& opt) {
  MaxSetCache cache(env, F);
  return pair_scan(
      env, "lhat-ab", opt,
      [&](int t, int tp) {
        Lottery ref = unif(env, F.choice[t]);
        for (int i = 0; i < env.agents(); ++i) {
          LhatSet L = lhat_AB(cache, i, t, opt.xi_cap);
          if (!contained_in_target(env, L.poly, i, tp, ref)) return false;
        }
        return true;
      },
      [&](int t, int tp) { return is_subset(F.choice[t], F.choice[tp]); });
}

CheckReport check_lhat_CD(const Environment& env, const Scc& F,
                          const CheckOptions& opt) {
  CheckReport report;
  report.condition = "lhat-cd";
  MaxSetCache cache(env, F);
  for (int t = 0; t < env.num_states(); ++t) {
    for (int tp = 0; tp < env.num_states(); ++tp) {
      if (t == tp) continue;
      for (int a : F.choice[t]) {
        ++report.pairs_checked;
        Lottery az = unit_lottery(env, a);
        bool antecedent = true;
        for (int i = 0; i < env.agents() && antecedent; ++i) {
          LhatSet L = lhat_CD(cache, i, t, a, opt.xi_cap);
          if (!contained_in_target(env, L.poly, i, tp, az)) {
            antecedent = false;
          }
        }
        if (!antecedent) continue;
        if (std::binary_search(F.choice[tp].begin(), F.choice[tp].end(), a)) {
          continue;
        }
        CheckWitness w;
        w.theta = t;
        w.theta_prime = tp;
        w.outcome = a;
        report.verdict = Verdict::kFails;
        if (!report.witness) report.witness = w;
        if (!opt.all_witnesses) return report;
        report.all_witnesses.push_back(w);
      }
    }
  }
  return report;
}

namespace {

bool outcome_set_clause_holds(const Environment& env, const Scc& F, int i,
                              int t, int tp, const std::vector<int>& universe) {
  // Clause (1): every outcome of `universe` weakly below all of F(theta) at
  // theta' for agent i.
  std::vector<int> lc = lower_contour_Z_of_set(env, i, tp, F.choice[t]);
  return is_subset(universe, lc);
}

template <typename LhatFn, typename SlhatFn>
CheckReport set_mono_scan(const Environment& env, const Scc& F,
                          std::string condition, const CheckOptions& opt,
                          const std::vector<int>& universe, LhatFn lhat,
                          SlhatFn slhat) {
  CheckReport report;
  report.condition = std::move(condition);
  for (int t = 0; t < env.num_states(); ++t) {
    for (int tp = 0; tp < env.num_states(); ++tp) {
      if (t == tp) continue;
      ++report.pairs_checked;
      bool antecedent = true;
      for (int i = 0; i < env.agents() && antecedent; ++i) {
        if (outcome_set_clause_holds(env, F, i, t, tp, universe)) continue;
        for (int a : F.choice[t]) {
          if (!is_subset(lhat(i, t, a), lower_contour_Z(env, i, tp, a)) ||
              !is_subset(slhat(i, t, a),
                         strict_lower_contour_Z(env, i, tp, a))) {
            antecedent = false;
            break;
          }
        }
      }
      if (!antecedent) continue;
      if (is_subset(F.choice[t], F.choice[tp])) continue;
      CheckWitness w;
      w.theta = t;
      w.theta_prime = tp;
      report.verdict = Verdict::kFails;
      if (!report.witness) report.witness = w;
      if (!opt.all_witnesses) return report;
      report.all_witnesses.push_back(w);
    }
  }
  return report;
}

}  // namespace

CheckReport check_set_monotonicity(const OrdinalEnvironment& oenv,
                                   const Scc& F, const CheckOptions& opt) {
  Environment env = rank_representation(oenv);
  std::vector<int> all(env.num_outcomes());
  for (int z = 0; z < env.num_outcomes(); ++z) all[z] = z;
  return set_mono_scan(
      env, F, "set-mono", opt, all,
      [&](int i, int t, int a) { return lower_contour_Z(env, i, t, a); },
      [&](int i, int t, int a) {
        return strict_lower_contour_Z(env, i, t, a);
      });
}

CheckReport check_strong_set_monotonicity(const OrdinalEnvironment& oenv,
                                          const Scc& F,
                                          const CheckOptions& opt) {
  // Every ingredient below depends only on order comparisons, so the rank
  // representation decides the ordinal condition exactly.
  Environment env = rank_representation(oenv);
  MaxSetCache cache(env, F);
  return set_mono_scan(
      env, F, "strong-set-mono", opt, cache.zstar(),
      [&](int i, int t, int a) {
        return lhat_zstar_AB(cache, i, t, a, opt.xi_cap);
      },
      [&](int i, int t, int a) {
        return slhat_zstar_AB(cache, i, t, a, opt.xi_cap);
      });
}

CheckReport check_LY_uniform(const OrdinalEnvironment& oenv, const Scc& F,
                             const CheckOptions& opt) {
  CheckReport report = check_set_monotonicity(oenv, F, opt);
  report.condition = "ly-uniform";
  if (report.witness) {
    report.witness->note = "decided via set-monotonicity equivalence";
  }
  return report;
}

// ---------------------------------------------------------------------------
// Witness re-verification.

namespace {

bool pairwise_recheck(const Environment& env, const Scf& f,
                      const std::string& condition, const CheckWitness& w) {
  int t = w.theta, tp = w.theta_prime;
  if (t < 0 || tp < 0) return false;
  Lottery fz = unit_lottery(env, f.choice[t]);
  std::vector<int> all(env.num_outcomes());
  for (int z = 0; z < env.num_outcomes(); ++z) all[z] = z;
  bool antecedent = true;
  for (int i = 0; i < env.agents() && antecedent; ++i) {
    ContourPolytope poly;
    if (condition == "maskin") {
      poly = lower_contour_Y(env, i, t, fz, all);
    } else {
      poly = lhat_scf(env, f, i, t).poly;
    }
    antecedent = contained_in_target(env, poly, i, tp, fz);
  }
  return antecedent && f.choice[t] != f.choice[tp];
}

}  // namespace

bool recheck_witness(const Environment& env, const Scf& f,
                     const std::string& condition, const CheckWitness& w,
                     int xi_cap) {
  (void)xi_cap;
  if (condition == "maskin" || condition == "lhat-scf") {
    return pairwise_recheck(env, f, condition, w);
  }
  if (condition == "no-veto") {
    if (w.theta < 0 || w.outcome < 0) return false;
    int tops = 0;
    for (int i = 0; i < env.agents(); ++i) {
      std::vector<int> amax = env.argmax_utility(i, w.theta);
      if (std::binary_search(amax.begin(), amax.end(), w.outcome)) ++tops;
    }
    return tops >= env.agents() - 1 && f.choice[w.theta] != w.outcome;
  }
  return false;
}

bool recheck_witness(const Environment& env, const Scc& F,
                     const std::string& condition, const CheckWitness& w,
                     int xi_cap) {
  int t = w.theta, tp = w.theta_prime;
  if (condition == "lhat-ef") {
    if (w.note == "Z is an i-max set at this state") {
      std::vector<int> all(env.num_outcomes());
      for (int z = 0; z < env.num_outcomes(); ++z) all[z] = z;
      return t >= 0 && is_i_theta_max_set(env, all, 0, t);
    }
    if (t < 0 || tp < 0 || w.outcome < 0) return false;
    Lottery az = unit_lottery(env, w.outcome);
    for (int i = 0; i < env.agents(); ++i) {
      LhatSet L = lhat_scc_EF(env, F, i, t, w.outcome);
      if (!contained_in_target(env, L.poly, i, tp, az)) return false;
    }
    return !std::binary_search(F.choice[tp].begin(), F.choice[tp].end(),
                               w.outcome);
  }
  if (condition == "lhat-ab") {
    if (t < 0 || tp < 0) return false;
    MaxSetCache cache(env, F);
    Lottery ref = unif(env, F.choice[t]);
    for (int i = 0; i < env.agents(); ++i) {
      LhatSet L = lhat_AB(cache, i, t, xi_cap);
      if (!contained_in_target(env, L.poly, i, tp, ref)) return false;
    }
    return !is_subset(F.choice[t], F.choice[tp]);
  }
  if (condition == "lhat-cd") {
    if (t < 0 || tp < 0 || w.outcome < 0) return false;
    MaxSetCache cache(env, F);
    Lottery az = unit_lottery(env, w.outcome);
    for (int i = 0; i < env.agents(); ++i) {
      LhatSet L = lhat_CD(cache, i, t, w.outcome, xi_cap);
      if (!contained_in_target(env, L.poly, i, tp, az)) return false;
    }
    return !std::binary_search(F.choice[tp].begin(), F.choice[tp].end(),
                               w.outcome);
  }
  return false;
}

bool recheck_witness(const OrdinalEnvironment& oenv, const Scc& F,
                     const std::string& condition, const CheckWitness& w,
                     int xi_cap) {
  CheckOptions opt;
  opt.all_witnesses = true;
  opt.xi_cap = xi_cap;
  CheckReport report;
  if (condition == "set-mono" || condition == "ly-uniform") {
    report = check_set_monotonicity(oenv, F, opt);
  } else if (condition == "strong-set-mono") {
    report = check_strong_set_monotonicity(oenv, F, opt);
  } else {
    return false;
  }
  for (const auto& cand : report.all_witnesses) {
    if (cand.theta == w.theta && cand.theta_prime == w.theta_prime) {
      return true;
    }
  }
  return false;
}

}  // namespace implkit
