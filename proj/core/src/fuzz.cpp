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

#include "implkit/fuzz.hpp"

#include <algorithm>
#include <set>

#include "implkit/checks.hpp"

namespace implkit {

namespace {

// Bounded draws through modulo keep instances replayable across platforms.
int draw(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

std::uint64_t instance_seed(std::uint64_t master, int index) {
  // splitmix64 step over master + index.
  std::uint64_t x = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

Environment RandomModel::environment(std::mt19937_64& rng, int agents,
                                     int max_states, int max_outcomes,
                                     int grid_max, int min_outcomes) {
  int ns = draw(rng, 1, max_states);
  int nz = draw(rng, min_outcomes, max_outcomes);
  std::vector<std::string> states, outcomes;
  for (int t = 0; t < ns; ++t) states.push_back("s" + std::to_string(t + 1));
  for (int z = 0; z < nz; ++z) outcomes.push_back(std::string(1, 'a' + z));
  Environment env(agents, states, outcomes);
  for (int i = 0; i < agents; ++i) {
    for (int t = 0; t < ns; ++t) {
      for (int z = 0; z < nz; ++z) {
        env.set_utility(i, t, z, Rational(draw(rng, 0, grid_max)));
      }
    }
  }
  return env;
}

Scf RandomModel::scf(std::mt19937_64& rng, const Environment& env) {
  Scf f;
  f.choice.resize(env.num_states());
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::set<int> range;
    for (int t = 0; t < env.num_states(); ++t) {
      f.choice[t] = draw(rng, 0, env.num_outcomes() - 1);
      range.insert(f.choice[t]);
    }
    if (range.size() >= 2 || env.num_states() < 2) return f;
  }
  // Force two distinct values as a last resort.
  f.choice[0] = 0;
  f.choice[1 % env.num_states()] = 1 % env.num_outcomes();
  return f;
}

Scc RandomModel::scc(std::mt19937_64& rng, const Environment& env) {
  Scc F;
  F.choice.resize(env.num_states());
  for (int t = 0; t < env.num_states(); ++t) {
    std::vector<int> v;
    for (int z = 0; z < env.num_outcomes(); ++z) {
      if (draw(rng, 0, 1)) v.push_back(z);
    }
    if (v.empty()) v.push_back(draw(rng, 0, env.num_outcomes() - 1));
    F.choice[t] = std::move(v);
  }
  return F;
}

Lottery RandomModel::lottery(std::mt19937_64& rng, const Environment& env,
                             int max_denominator) {
  int den = draw(rng, 1, max_denominator);
  std::vector<int> counts(env.num_outcomes(), 0);
  for (int k = 0; k < den; ++k) {
    ++counts[draw(rng, 0, env.num_outcomes() - 1)];
  }
  Lottery y;
  y.p.reserve(env.num_outcomes());
  for (int z = 0; z < env.num_outcomes(); ++z) {
    y.p.push_back(Rational(counts[z], den));
  }
  return y;
}

Mechanism RandomModel::mechanism(std::mt19937_64& rng, const Environment& env,
                                 int max_msgs, int max_denominator) {
  Mechanism mech;
  std::size_t profiles = 1;
  for (int i = 0; i < env.agents(); ++i) {
    int n = draw(rng, 1, max_msgs);
    std::vector<std::string> names;
    for (int k = 0; k < n; ++k) names.push_back("m" + std::to_string(k + 1));
    profiles *= names.size();
    mech.messages.push_back(std::move(names));
  }
  mech.table.reserve(profiles);
  for (std::size_t p = 0; p < profiles; ++p) {
    mech.table.push_back(lottery(rng, env, max_denominator));
  }
  return mech;
}

FuzzReport necessity_fuzz(const FuzzConfig& config) {
  FuzzReport report;
  CheckOptions opt;
  opt.xi_cap = config.xi_cap;
  for (int k = 0; k < config.count; ++k) {
    std::uint64_t seed = instance_seed(config.seed, k);
    std::mt19937_64 rng(seed);
    Environment env = RandomModel::environment(rng, 3, config.max_states,
                                               config.max_outcomes);
    Mechanism mech = RandomModel::mechanism(rng, env, config.max_msgs);
    ++report.instances;

    auto record = [&](const std::string& clause, const std::string& detail) {
      report.violations.push_back({k, seed, clause, detail});
    };

    ImplementedCorrespondence ic = implemented_correspondence(mech, env);
    if (ic.implementing) {
      ++report.with_nonempty_pne;
      // (a) the equilibrium correspondence satisfies the A-B uniform
      // condition.
      CheckReport ab = check_lhat_AB_uniform(env, ic.F, opt);
      if (ab.verdict != Verdict::kHolds) {
        record("pne-ab-uniform", "witness pair (" +
                                     env.state_name(ab.witness->theta) + ", " +
                                     env.state_name(ab.witness->theta_prime) +
                                     ")");
      }
      // (b) single-valued correspondences satisfy the SCF condition.
      if (ic.F.single_valued()) {
        ++report.single_valued;
        CheckReport scf_check = check_lhat_scf(env, ic.F.as_scf(), opt);
        if (scf_check.verdict != Verdict::kHolds) {
          record("pne-lhat-scf",
                 "witness pair (" +
                     env.state_name(scf_check.witness->theta) + ", " +
                     env.state_name(scf_check.witness->theta_prime) + ")");
        }
      }
      // (c) all outcome supports live inside the effective universe of the
      // implemented correspondence.
      std::vector<int> zs = z_star(env, ic.F);
      for (const Lottery& y : mech.table) {
        ++report.supports_checked;
        for (int z : y.support()) {
          if (!std::binary_search(zs.begin(), zs.end(), z)) {
            record("support-in-zstar", "outcome " + env.outcome_name(z));
            break;
          }
        }
      }
    }

    if (config.check_rationalizability) {
      Scc R = rationalizable_correspondence(mech, env);
      bool nonempty = true;
      for (const auto& v : R.choice) {
        if (v.empty()) nonempty = false;
      }
      if (nonempty) {
        CheckReport ab = check_lhat_AB_uniform(env, R, opt);
        if (ab.verdict != Verdict::kHolds) {
          record("rationalizable-ab-uniform",
                 "witness pair (" + env.state_name(ab.witness->theta) + ", " +
                     env.state_name(ab.witness->theta_prime) + ")");
        }
      }
    }
  }
  return report;
}

}  // namespace implkit
