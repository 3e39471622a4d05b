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

#ifndef IMPLKIT_MAX_SETS_HPP_
#define IMPLKIT_MAX_SETS_HPP_

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "implkit/geometry.hpp"

namespace implkit {

inline constexpr int kDefaultXiCap = 12;

// Sorted-vector set helpers used throughout the combinatorial layer.
std::vector<int> set_intersect(const std::vector<int>& a,
                               const std::vector<int>& b);
std::vector<int> set_union(const std::vector<int>& a,
                           const std::vector<int>& b);
bool is_subset(const std::vector<int>& a, const std::vector<int>& b);

// E is internally top-equivalent for i and globally top within `universe`
// for every other agent, at theta.
bool is_max_set_in(const Environment& env, const std::vector<int>& universe,
                   const std::vector<int>& E, int i, int theta);

// The universe-Z specializations.
bool is_i_theta_max_set(const Environment& env, const std::vector<int>& E,
                        int i, int theta);
bool is_i_max_set(const Environment& env, const std::vector<int>& E, int i);

// Effective outcome universe: the union of the correspondence's values when
// the full outcome set is some agent's max set, otherwise all of Z.
std::vector<int> z_star(const Environment& env, const Scc& F);

enum class LhatVariant { kScf, kEF, kAB, kCD, kZstarAB };

struct LhatSet {
  ContourPolytope poly;
  LhatVariant variant = LhatVariant::kScf;
  bool first_branch = false;  // the singleton / Xi-restricted branch
};

// SCF-side constructions (no Z* machinery needed).
LhatSet lhat_scf(const Environment& env, const Scf& f, int i, int theta);

// Outcome set reachable with positive probability from lhat_scf, computed
// both ways; throws InternalMismatch if the two routes disagree.
std::vector<int> gamma_hat(const Environment& env, const Scf& f, int i,
                           int theta);
std::vector<int> gamma_hat_support_union(const Environment& env, const Scf& f,
                                         int i, int theta);
std::vector<int> gamma_hat_closed_form(const Environment& env, const Scf& f,
                                       int i, int theta);

// SCC E-F variant, defined pointwise at an outcome a.
LhatSet lhat_scc_EF(const Environment& env, const Scc& F, int i, int theta,
                    int a);

struct XiFamily {
  std::vector<std::vector<int>> members;  // each a sorted state set
  // Candidate K whose base intersection came out empty; such K are skipped
  // because max sets are defined for nonempty sets only.
  std::vector<std::vector<int>> skipped_empty_base;
};

// Memoizing context for one (environment, SCC) pair.  Verdicts are
// deterministic functions of the inputs; the cache only avoids repeated
// scans.  Not synchronized: use one instance per thread.
class MaxSetCache {
 public:
  MaxSetCache(const Environment& env, const Scc& F);

  const Environment& env() const { return *env_; }
  const Scc& scc() const { return *F_; }
  const std::vector<int>& zstar() const { return zstar_; }

  bool is_i_zstar_theta_max(const std::vector<int>& E, int i, int theta);

  // All states where E is an i-Z*-theta-max set, in declared order.
  const std::vector<int>& lambda_states(const std::vector<int>& E, int i);

  bool is_i_zstar_max(const std::vector<int>& E, int i) {
    return !lambda_states(E, i).empty();
  }

  // Z* intersect L_i^Z(F(theta), theta).
  std::vector<int> base_set(int i, int theta);

  // States theta' where F(theta) is an i-Z*-theta'-max set contained in
  // F(theta').
  std::vector<int> theta_i_theta(int i, int theta);

  XiFamily xi_family_detail(int i, int theta, int cap = kDefaultXiCap);
  std::vector<std::vector<int>> xi_family(int i, int theta,
                                          int cap = kDefaultXiCap);

  // One member of xi_family found by forward iteration; nullopt when the
  // chain starts empty (or fails to reach a fixed point outside the
  // guaranteed regime).
  std::optional<std::vector<int>> xi_iterative_member(int i, int theta);

  // Union over the Xi family of the intersected correspondence values,
  // intersected with the base set: the first-branch ground set.
  std::vector<int> xi_union_ground(int i, int theta, int cap = kDefaultXiCap);

  bool f_theta_in_zstar_argmin(int i, int theta);

 private:
  const Environment* env_;
  const Scc* F_;
  std::vector<int> zstar_;
  std::map<std::pair<std::vector<int>, int>, std::vector<int>> lambda_memo_;
};

// SCC A-B variant at UNIF[F(theta)].
LhatSet lhat_AB(MaxSetCache& cache, int i, int theta, int cap = kDefaultXiCap);
std::vector<int> gamma_hat_AB(MaxSetCache& cache, int i, int theta,
                              int cap = kDefaultXiCap);
std::vector<int> gamma_hat_AB_support_union(MaxSetCache& cache, int i,
                                            int theta, int cap = kDefaultXiCap);
std::vector<int> gamma_hat_AB_closed_form(MaxSetCache& cache, int i, int theta,
                                          int cap = kDefaultXiCap);

// SCC C-D variant at outcome a.
LhatSet lhat_CD(MaxSetCache& cache, int i, int theta, int a,
                int cap = kDefaultXiCap);

// Outcome-set analogues used by strong set-monotonicity.
std::vector<int> lhat_zstar_AB(MaxSetCache& cache, int i, int theta, int a,
                               int cap = kDefaultXiCap);
std::vector<int> slhat_zstar_AB(MaxSetCache& cache, int i, int theta, int a,
                                int cap = kDefaultXiCap);

}  // namespace implkit

#endif  // IMPLKIT_MAX_SETS_HPP_
