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

#include "implkit/max_sets.hpp"

#include <algorithm>
#include <set>

namespace implkit {

std::vector<int> set_intersect(const std::vector<int>& a,
                               const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<int> set_union(const std::vector<int>& a,
                           const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool is_max_set_in(const Environment& env, const std::vector<int>& universe,
                   const std::vector<int>& E, int i, int theta) {
  if (E.empty()) throw Error(Errc::kEmptySet, "max-set test on empty E");
  // E must be a plateau of u_i^theta within E itself.
  const Rational& ref = env.utility(i, theta, E.front());
  for (int z : E) {
    if (env.utility(i, theta, z) != ref) return false;
  }
  // And globally top within `universe` for every other agent.
  for (int j = 0; j < env.agents(); ++j) {
    if (j == i) continue;
    Rational top = env.utility(j, theta, universe.front());
    for (int z : universe) {
      const Rational& u = env.utility(j, theta, z);
      if (u > top) top = u;
    }
    for (int z : E) {
      if (env.utility(j, theta, z) != top) return false;
    }
  }
  return true;
}

bool is_i_theta_max_set(const Environment& env, const std::vector<int>& E,
                        int i, int theta) {
  std::vector<int> all(env.num_outcomes());
  for (int z = 0; z < env.num_outcomes(); ++z) all[z] = z;
  return is_max_set_in(env, all, E, i, theta);
}

bool is_i_max_set(const Environment& env, const std::vector<int>& E, int i) {
  for (int t = 0; t < env.num_states(); ++t) {
    if (is_i_theta_max_set(env, E, i, t)) return true;
  }
  return false;
}

std::vector<int> z_star(const Environment& env, const Scc& F) {
  std::vector<int> all(env.num_outcomes());
  for (int z = 0; z < env.num_outcomes(); ++z) all[z] = z;
  // For E = Z the max-set test does not depend on which agent is singled
  // out, so probing agent 0 decides "Z is an i-max set for some i".
  if (env.agents() > 0 && is_i_max_set(env, all, 0)) {
    std::vector<int> u;
    for (const auto& v : F.choice) u = set_union(u, v);
    return u;
  }
  return all;
}

// ---------------------------------------------------------------------------
// SCF-side constructions.

LhatSet lhat_scf(const Environment& env, const Scf& f, int i, int theta) {
  LhatSet out;
  out.variant = LhatVariant::kScf;
  int fz = f.choice[theta];
  std::vector<int> amin = env.argmin_utility(i, theta);
  bool f_is_argmin = std::binary_search(amin.begin(), amin.end(), fz);
  if (f_is_argmin &&
      is_i_max_set(env, lower_contour_Z(env, i, theta, fz), i)) {
    out.first_branch = true;
    out.poly.n_outcomes = env.num_outcomes();
    out.poly.ground = {fz};
    return out;
  }
  std::vector<int> all(env.num_outcomes());
  for (int z = 0; z < env.num_outcomes(); ++z) all[z] = z;
  out.poly = lower_contour_Y(env, i, theta, unit_lottery(env, fz), all);
  return out;
}

std::vector<int> gamma_hat_support_union(const Environment& env, const Scf& f,
                                         int i, int theta) {
  LhatSet L = lhat_scf(env, f, i, theta);
  std::set<int> acc;
  for (const Lottery& v : vertices(L.poly).v) {
    for (int z : v.support()) acc.insert(z);
  }
  return {acc.begin(), acc.end()};
}

std::vector<int> gamma_hat_closed_form(const Environment& env, const Scf& f,
                                       int i, int theta) {
  int fz = f.choice[theta];
  std::vector<int> amin = env.argmin_utility(i, theta);
  if (!std::binary_search(amin.begin(), amin.end(), fz)) {
    std::vector<int> all(env.num_outcomes());
    for (int z = 0; z < env.num_outcomes(); ++z) all[z] = z;
    return all;
  }
  std::vector<int> L = lower_contour_Z(env, i, theta, fz);
  if (is_i_max_set(env, L, i)) return {fz};
  return L;
}

std::vector<int> gamma_hat(const Environment& env, const Scf& f, int i,
                           int theta) {
  std::vector<int> a = gamma_hat_support_union(env, f, i, theta);
  std::vector<int> b = gamma_hat_closed_form(env, f, i, theta);
  if (a != b) {
    throw Error(Errc::kInternalMismatch,
                "gamma_hat support union disagrees with closed form at (" +
                    std::to_string(i) + ", " + env.state_name(theta) + ")");
  }
  return a;
}

LhatSet lhat_scc_EF(const Environment& env, const Scc& F, int i, int theta,
                    int a) {
  LhatSet out;
  out.variant = LhatVariant::kEF;
  const auto& Ft = F.choice[theta];
  std::vector<int> amin = env.argmin_utility(i, theta);
  bool in_f = std::binary_search(Ft.begin(), Ft.end(), a);
  bool in_amin = std::binary_search(amin.begin(), amin.end(), a);
  if (in_f && in_amin &&
      is_i_max_set(env, lower_contour_Z(env, i, theta, a), i)) {
    out.first_branch = true;
    out.poly.n_outcomes = env.num_outcomes();
    out.poly.ground = {a};
    return out;
  }
  std::vector<int> all(env.num_outcomes());
  for (int z = 0; z < env.num_outcomes(); ++z) all[z] = z;
  out.poly = lower_contour_Y(env, i, theta, unit_lottery(env, a), all);
  return out;
}

// ---------------------------------------------------------------------------
// MaxSetCache: the Z*-relative machinery.

MaxSetCache::MaxSetCache(const Environment& env, const Scc& F)
    : env_(&env), F_(&F), zstar_(z_star(env, F)) {}

bool MaxSetCache::is_i_zstar_theta_max(const std::vector<int>& E, int i,
                                       int theta) {
  if (E.empty()) throw Error(Errc::kEmptySet, "i-Z*-theta-max on empty E");
  if (!is_subset(E, zstar_)) {
    throw Error(Errc::kNotSubsetOfZstar, "E must lie inside Z*");
  }
  return is_max_set_in(*env_, zstar_, E, i, theta);
}

const std::vector<int>& MaxSetCache::lambda_states(const std::vector<int>& E,
                                                   int i) {
  auto key = std::make_pair(E, i);
  auto it = lambda_memo_.find(key);
  if (it != lambda_memo_.end()) return it->second;
  std::vector<int> states;
  for (int t = 0; t < env_->num_states(); ++t) {
    if (is_i_zstar_theta_max(E, i, t)) states.push_back(t);
  }
  return lambda_memo_.emplace(std::move(key), std::move(states))
      .first->second;
}

std::vector<int> MaxSetCache::base_set(int i, int theta) {
  return set_intersect(
      zstar_, lower_contour_Z_of_set(*env_, i, theta, F_->choice[theta]));
}

std::vector<int> MaxSetCache::theta_i_theta(int i, int theta) {
  std::vector<int> out;
  const auto& Ft = F_->choice[theta];
  for (int tp = 0; tp < env_->num_states(); ++tp) {
    if (is_i_zstar_theta_max(Ft, i, tp) && is_subset(Ft, F_->choice[tp])) {
      out.push_back(tp);
    }
  }
  return out;
}

XiFamily MaxSetCache::xi_family_detail(int i, int theta, int cap) {
  std::vector<int> domain = theta_i_theta(i, theta);
  if (static_cast<int>(domain.size()) > cap) {
    throw Error(Errc::kThetaSetTooLarge,
                "|Theta_i^theta| = " + std::to_string(domain.size()) +
                    " exceeds cap " + std::to_string(cap) + " at (" +
                    std::to_string(i) + ", " + env_->state_name(theta) + ")");
  }
  XiFamily fam;
  std::vector<int> base = base_set(i, theta);
  const std::size_t n = domain.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> K;
    for (std::size_t b = 0; b < n; ++b) {
      if (mask & (std::size_t{1} << b)) K.push_back(domain[b]);
    }
    std::vector<int> inner = base;
    for (int tp : K) inner = set_intersect(inner, F_->choice[tp]);
    if (inner.empty()) {
      fam.skipped_empty_base.push_back(std::move(K));
      continue;
    }
    std::vector<int> img = set_intersect(domain, lambda_states(inner, i));
    if (img == K) fam.members.push_back(std::move(K));
  }
  return fam;
}

std::vector<std::vector<int>> MaxSetCache::xi_family(int i, int theta,
                                                     int cap) {
  return xi_family_detail(i, theta, cap).members;
}

std::optional<std::vector<int>> MaxSetCache::xi_iterative_member(int i,
                                                                 int theta) {
  std::vector<int> domain = theta_i_theta(i, theta);
  std::vector<int> base = base_set(i, theta);
  auto step = [&](const std::vector<int>& K) {
    std::vector<int> inner = base;
    for (int tp : K) inner = set_intersect(inner, F_->choice[tp]);
    std::vector<int> next;
    if (inner.empty()) return next;
    for (int tp : domain) {
      if (is_i_zstar_theta_max(inner, i, tp)) next.push_back(tp);
    }
    return next;
  };
  std::vector<int> K;
  if (base.empty()) return std::nullopt;
  for (int tp : domain) {
    if (is_i_zstar_theta_max(base, i, tp)) K.push_back(tp);
  }
  if (K.empty()) return std::nullopt;
  // The chain is monotone under the regime that guarantees a member exists;
  // the seen-set guard only protects against ill-conditioned inputs.
  std::set<std::vector<int>> seen;
  while (seen.insert(K).second) {
    std::vector<int> next = step(K);
    if (next == K) return K;
    K = std::move(next);
    if (K.empty()) return std::nullopt;
  }
  return std::nullopt;
}

std::vector<int> MaxSetCache::xi_union_ground(int i, int theta, int cap) {
  std::vector<int> base = base_set(i, theta);
  std::vector<int> acc;
  for (const auto& K : xi_family(i, theta, cap)) {
    std::vector<int> inner = base;
    for (int tp : K) inner = set_intersect(inner, F_->choice[tp]);
    acc = set_union(acc, inner);
  }
  return acc;
}

bool MaxSetCache::f_theta_in_zstar_argmin(int i, int theta) {
  std::vector<int> amin = env_->argmin_in(i, theta, zstar_);
  return is_subset(F_->choice[theta], amin);
}

// ---------------------------------------------------------------------------
// SCC A-B / C-D / Z* constructions.

namespace {

bool ab_first_branch(MaxSetCache& cache, int i, int theta, int cap) {
  if (!cache.f_theta_in_zstar_argmin(i, theta)) return false;
  std::vector<int> base = cache.base_set(i, theta);
  if (base.empty() || !cache.is_i_zstar_max(base, i)) return false;
  return !cache.xi_family(i, theta, cap).empty();
}

}  // namespace

LhatSet lhat_AB(MaxSetCache& cache, int i, int theta, int cap) {
  const Environment& env = cache.env();
  LhatSet out;
  out.variant = LhatVariant::kAB;
  if (ab_first_branch(cache, i, theta, cap)) {
    std::vector<int> ground = cache.xi_union_ground(i, theta, cap);
    if (ground.empty()) {
      // The defining hypotheses put F(theta) inside this set; emptiness
      // means the input is outside the theory's reach.
      throw Error(Errc::kEmptyPolytope, "A-B first-branch ground set empty");
    }
    out.first_branch = true;
    out.poly.n_outcomes = env.num_outcomes();
    out.poly.ground = std::move(ground);
    return out;
  }
  Lottery ref = unif(env, cache.scc().choice[theta]);
  out.poly = lower_contour_Y(env, i, theta, ref, cache.zstar());
  return out;
}

std::vector<int> gamma_hat_AB_support_union(MaxSetCache& cache, int i,
                                            int theta, int cap) {
  LhatSet L = lhat_AB(cache, i, theta, cap);
  std::set<int> acc;
  for (const Lottery& v : vertices(L.poly).v) {
    for (int z : v.support()) acc.insert(z);
  }
  return {acc.begin(), acc.end()};
}

std::vector<int> gamma_hat_AB_closed_form(MaxSetCache& cache, int i, int theta,
                                          int cap) {
  if (ab_first_branch(cache, i, theta, cap)) {
    return cache.xi_union_ground(i, theta, cap);
  }
  if (cache.f_theta_in_zstar_argmin(i, theta)) return cache.base_set(i, theta);
  return cache.zstar();
}

std::vector<int> gamma_hat_AB(MaxSetCache& cache, int i, int theta, int cap) {
  std::vector<int> a = gamma_hat_AB_support_union(cache, i, theta, cap);
  std::vector<int> b = gamma_hat_AB_closed_form(cache, i, theta, cap);
  if (a != b) {
    throw Error(Errc::kInternalMismatch,
                "gamma_hat_AB support union disagrees with closed form at (" +
                    std::to_string(i) + ", " +
                    cache.env().state_name(theta) + ")");
  }
  return a;
}

LhatSet lhat_CD(MaxSetCache& cache, int i, int theta, int a, int cap) {
  const Environment& env = cache.env();
  const Scc& F = cache.scc();
  LhatSet out;
  out.variant = LhatVariant::kCD;

  std::vector<int> zstar_amin = env.argmin_in(i, theta, cache.zstar());
  std::vector<int> fmin = set_intersect(F.choice[theta], zstar_amin);

  // Theta_i^{theta-C-D}: states where the argmin part of F(theta) is an
  // i-Z*-max set contained in F(theta').
  std::vector<int> domain;
  if (!fmin.empty()) {
    for (int tp = 0; tp < env.num_states(); ++tp) {
      if (cache.is_i_zstar_theta_max(fmin, i, tp) &&
          is_subset(fmin, F.choice[tp])) {
        domain.push_back(tp);
      }
    }
  }
  if (static_cast<int>(domain.size()) > cap) {
    throw Error(Errc::kThetaSetTooLarge,
                "|Theta_i^{theta-C-D}| exceeds cap at (" + std::to_string(i) +
                    ", " + env.state_name(theta) + ")");
  }

  std::vector<int> base = cache.base_set(i, theta);
  std::vector<std::vector<int>> xi_cd;
  const std::size_t n = domain.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> K;
    for (std::size_t bit = 0; bit < n; ++bit) {
      if (mask & (std::size_t{1} << bit)) K.push_back(domain[bit]);
    }
    std::vector<int> inner = base;
    for (int tp : K) inner = set_intersect(inner, F.choice[tp]);
    if (inner.empty()) continue;
    std::vector<int> img = set_intersect(domain, cache.lambda_states(inner, i));
    if (img == K) xi_cd.push_back(std::move(K));
  }

  bool a_in_fmin = std::binary_search(fmin.begin(), fmin.end(), a);
  bool base_max = !base.empty() && cache.is_i_zstar_max(base, i);
  if (a_in_fmin && !xi_cd.empty() && base_max) {
    std::vector<int> ground;
    for (const auto& K : xi_cd) {
      std::vector<int> inner = base;
      for (int tp : K) inner = set_intersect(inner, F.choice[tp]);
      ground = set_union(ground, inner);
    }
    if (ground.empty()) {
      throw Error(Errc::kEmptyPolytope, "C-D first-branch ground set empty");
    }
    out.first_branch = true;
    out.poly.n_outcomes = env.num_outcomes();
    out.poly.ground = std::move(ground);
    return out;
  }
  out.poly =
      lower_contour_Y(env, i, theta, unit_lottery(env, a), cache.zstar());
  return out;
}

std::vector<int> lhat_zstar_AB(MaxSetCache& cache, int i, int theta, int a,
                               int cap) {
  if (ab_first_branch(cache, i, theta, cap)) {
    return cache.xi_union_ground(i, theta, cap);
  }
  return set_intersect(cache.zstar(),
                       lower_contour_Z(cache.env(), i, theta, a));
}

std::vector<int> slhat_zstar_AB(MaxSetCache& cache, int i, int theta, int a,
                                int cap) {
  return set_intersect(lhat_zstar_AB(cache, i, theta, a, cap),
                       strict_lower_contour_Z(cache.env(), i, theta, a));
}

}  // namespace implkit
