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

#ifndef IMPLKIT_CHECKS_HPP_
#define IMPLKIT_CHECKS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "implkit/max_sets.hpp"
#include "implkit/ordinal.hpp"

namespace implkit {

enum class Verdict { kHolds, kFails };

// A violating instance: the antecedent of the condition holds at this tuple
// while the consequent fails.  Fields not applicable to a condition stay -1.
struct CheckWitness {
  int theta = -1;
  int theta_prime = -1;
  int agent = -1;
  int outcome = -1;
  std::optional<Lottery> lottery;
  std::string note;
};

struct CheckReport {
  std::string condition;
  Verdict verdict = Verdict::kHolds;
  std::optional<CheckWitness> witness;     // first, in declared scan order
  std::vector<CheckWitness> all_witnesses;  // filled in all-witness mode
  long pairs_checked = 0;
};

struct CheckOptions {
  bool all_witnesses = false;
  int xi_cap = kDefaultXiCap;
};

CheckReport check_maskin(const Environment& env, const Scf& f,
                         const CheckOptions& opt = {});
CheckReport check_no_veto(const Environment& env, const Scf& f,
                          const CheckOptions& opt = {});
CheckReport check_lhat_scf(const Environment& env, const Scf& f,
                           const CheckOptions& opt = {});
CheckReport check_lhat_EF(const Environment& env, const Scc& F,
                          const CheckOptions& opt = {});
CheckReport check_lhat_AB_uniform(const Environment& env, const Scc& F,
                                  const CheckOptions& opt = {});
CheckReport check_lhat_CD(const Environment& env, const Scc& F,
                          const CheckOptions& opt = {});
CheckReport check_set_monotonicity(const OrdinalEnvironment& oenv,
                                   const Scc& F, const CheckOptions& opt = {});
CheckReport check_strong_set_monotonicity(const OrdinalEnvironment& oenv,
                                          const Scc& F,
                                          const CheckOptions& opt = {});
// Lemma-level alias: decided by set-monotonicity, reported under its own
// condition name.
CheckReport check_LY_uniform(const OrdinalEnvironment& oenv, const Scc& F,
                             const CheckOptions& opt = {});

// Re-evaluates a reported witness from scratch: true iff the antecedent
// holds and the consequent fails at the witness tuple.  Cardinal conditions
// take env + f or F; ordinal ones take oenv + F.
bool recheck_witness(const Environment& env, const Scf& f,
                     const std::string& condition, const CheckWitness& w,
                     int xi_cap = kDefaultXiCap);
bool recheck_witness(const Environment& env, const Scc& F,
                     const std::string& condition, const CheckWitness& w,
                     int xi_cap = kDefaultXiCap);
bool recheck_witness(const OrdinalEnvironment& oenv, const Scc& F,
                     const std::string& condition, const CheckWitness& w,
                     int xi_cap = kDefaultXiCap);

}  // namespace implkit

#endif  // IMPLKIT_CHECKS_HPP_
