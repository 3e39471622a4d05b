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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "implkit/equilibrium.hpp"
#include "implkit/fuzz.hpp"
#include "implkit/json_io.hpp"
#include "implkit/lp.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace implkit;
using namespace implkit::testing;

namespace {

Mechanism constant_mechanism(const Environment& env, int outcome,
                             const std::vector<int>& sizes) {
  Mechanism mech;
  std::size_t profiles = 1;
  for (int n : sizes) {
    std::vector<std::string> names;
    for (int k = 0; k < n; ++k) names.push_back("m" + std::to_string(k + 1));
    profiles *= n;
    mech.messages.push_back(std::move(names));
  }
  mech.table.assign(profiles, unit_lottery(env, outcome));
  return mech;
}

}  // namespace

TEST_CASE("equilibria of a constant game: everything") {
  Environment env = make_env(3, {"s"}, {"a", "b"});
  set_u_all(env, 0, {1, 0});
  Mechanism mech = constant_mechanism(env, 0, {2, 2, 2});
  CHECK(pure_ne(mech, env, 0).size() == 8);
  ImplementedCorrespondence ic = implemented_correspondence(mech, env);
  REQUIRE(ic.implementing);
  CHECK(ic.F.choice[0] == std::vector<int>{0});
}

TEST_CASE("a strictly dominant message pins the equilibria") {
  Environment env = make_env(3, {"s"}, {"a", "b"});
  set_u(env, 0, 0, {1, 0});
  set_u(env, 1, 0, {1, 1});
  set_u(env, 2, 0, {1, 1});
  Mechanism mech = constant_mechanism(env, 1, {2, 2, 2});
  // Agent 1's first message always induces a, the second always b.
  std::vector<int> profile(3, 0);
  do {
    std::size_t idx = mech.flat_index(profile);
    mech.table[idx] = unit_lottery(env, profile[0] == 0 ? 0 : 1);
  } while ([&] {
    int carry = 2;
    while (carry >= 0) {
      if (++profile[carry] < 2) return true;
      profile[carry] = 0;
      --carry;
    }
    return false;
  }());
  std::vector<std::vector<int>> eq = pure_ne(mech, env, 0);
  CHECK(eq.size() == 4);
  for (const auto& e : eq) CHECK(e[0] == 0);
}

TEST_CASE("no equilibrium means no implemented correspondence") {
  // Matching pennies between agents 1 and 2; agent 3 is a spectator.
  Environment env = make_env(3, {"s"}, {"a", "b"});
  set_u(env, 0, 0, {1, 0});
  set_u(env, 1, 0, {0, 1});
  set_u(env, 2, 0, {1, 1});
  Mechanism mech;
  mech.messages = {{"H", "T"}, {"H", "T"}, {"x"}};
  mech.table.assign(4, Lottery{});
  mech.table[mech.flat_index({0, 0, 0})] = unit_lottery(env, 0);
  mech.table[mech.flat_index({0, 1, 0})] = unit_lottery(env, 1);
  mech.table[mech.flat_index({1, 0, 0})] = unit_lottery(env, 1);
  mech.table[mech.flat_index({1, 1, 0})] = unit_lottery(env, 0);
  CHECK(pure_ne(mech, env, 0).empty());
  CHECK_FALSE(implemented_correspondence(mech, env).implementing);
}

TEST_CASE("enumeration agrees with a second best-reply pass") {
  std::mt19937_64 rng(151);
  for (int k = 0; k < 120; ++k) {
    Environment env = RandomModel::environment(rng, 3, 2, 3);
    Mechanism mech = RandomModel::mechanism(rng, env, 3);
    for (int t = 0; t < env.num_states(); ++t) {
      std::vector<std::vector<int>> eq = pure_ne(mech, env, t);
      std::vector<int> profile(3, 0);
      do {
        bool listed = std::find(eq.begin(), eq.end(), profile) != eq.end();
        CHECK(listed ==
              oracle::profile_is_ne_by_best_reply(mech, env, t, profile));
      } while ([&] {
        int carry = 2;
        while (carry >= 0) {
          if (++profile[carry] <
              static_cast<int>(mech.messages[carry].size())) {
            return true;
          }
          profile[carry] = 0;
          --carry;
        }
        return false;
      }());
    }
  }
}

TEST_CASE("rationalizability basics") {
  Environment env = make_env(3, {"s"}, {"a", "b"});
  set_u_all(env, 0, {1, 0});
  // Constant game: everything survives.
  Mechanism constant = constant_mechanism(env, 0, {2, 2, 2});
  std::vector<std::vector<int>> S = rationalizable_set(constant, env, 0);
  CHECK(S[0].size() == 2);
  CHECK(S[1].size() == 2);
  CHECK(S[2].size() == 2);

  // A strictly dominated message dies in round one.
  Mechanism mech = constant_mechanism(env, 0, {2, 1, 1});
  mech.table[mech.flat_index({0, 0, 0})] = unit_lottery(env, 0);
  mech.table[mech.flat_index({1, 0, 0})] = unit_lottery(env, 1);
  std::vector<std::vector<int>> S2 = rationalizable_set(mech, env, 0);
  CHECK(S2[0] == std::vector<int>{0});
}

TEST_CASE("equilibrium messages always survive rationalizability") {
  std::mt19937_64 rng(157);
  for (int k = 0; k < 80; ++k) {
    Environment env = RandomModel::environment(rng, 3, 2, 3);
    Mechanism mech = RandomModel::mechanism(rng, env, 3);
    for (int t = 0; t < env.num_states(); ++t) {
      std::vector<std::vector<int>> S = rationalizable_set(mech, env, t);
      for (const auto& e : pure_ne(mech, env, t)) {
        for (int i = 0; i < 3; ++i) {
          CHECK(std::binary_search(S[i].begin(), S[i].end(), e[i]));
        }
      }
    }
  }
}

TEST_CASE("lp feasibility agrees with belief-vertex enumeration") {
  std::mt19937_64 rng(163);
  int infeasible = 0;
  for (int k = 0; k < 150; ++k) {
    int n = 1 + static_cast<int>(rng() % 5);
    int m = 1 + static_cast<int>(rng() % 4);
    std::vector<std::vector<Rational>> A(m, std::vector<Rational>(n));
    for (auto& row : A) {
      for (auto& x : row) {
        x = Rational(static_cast<long>(rng() % 9) - 4,
                     static_cast<long>(rng() % 3) + 1);
      }
    }
    bool fast = lp_feasible(A, n);
    bool slow = oracle::belief_vertex_feasible(A, n);
    CHECK(fast == slow);
    if (!fast) ++infeasible;
  }
  CHECK(infeasible > 0);
}

TEST_CASE("best-reply membership agrees with the oracle inside iteration") {
  std::mt19937_64 rng(167);
  for (int k = 0; k < 40; ++k) {
    Environment env = RandomModel::environment(rng, 3, 2, 3);
    Mechanism mech = RandomModel::mechanism(rng, env, 3);
    int t = static_cast<int>(rng() % env.num_states());
    std::vector<std::vector<int>> S = rationalizable_set(mech, env, t);
    // Recompute one round of the operator with the vertex oracle: the fixed
    // point must be stable under it.
    for (int i = 0; i < 3; ++i) {
      for (int mi = 0; mi < static_cast<int>(mech.messages[i].size()); ++mi) {
        // Build margin rows against opponent survivor profiles.
        std::vector<int> others;
        for (int j = 0; j < 3; ++j) {
          if (j != i) others.push_back(j);
        }
        std::vector<std::vector<int>> opp;
        for (int x : S[others[0]]) {
          for (int y : S[others[1]]) {
            std::vector<int> profile(3, 0);
            profile[others[0]] = x;
            profile[others[1]] = y;
            opp.push_back(profile);
          }
        }
        std::vector<std::vector<Rational>> A;
        for (int alt = 0; alt < static_cast<int>(mech.messages[i].size());
             ++alt) {
          if (alt == mi) continue;
          std::vector<Rational> row;
          for (auto profile : opp) {
            profile[i] = mi;
            Rational u1 = expected_utility(env, i, t, mech.outcome(profile));
            profile[i] = alt;
            Rational u2 = expected_utility(env, i, t, mech.outcome(profile));
            row.push_back(u1 - u2);
          }
          A.push_back(std::move(row));
        }
        bool member = oracle::belief_vertex_feasible(
            A, static_cast<int>(opp.size()));
        CHECK(member == std::binary_search(S[i].begin(), S[i].end(), mi));
      }
    }
  }
}

TEST_CASE("deviation-support inclusion at equilibrium") {
  // The constant mechanism on the bottomed-out environment satisfies the
  // antecedent for agent 1 and the inclusion.
  Environment c = env_c();
  Mechanism mech = constant_mechanism(c, 0, {2, 2, 2});
  Scc F_M = implemented_correspondence(mech, c).F;
  REQUIRE(F_M.choice[0] == std::vector<int>{0});
  std::vector<int> profile{0, 0, 0};
  DeviationCheck d = lemma11_deviation_check(mech, c, F_M, 0, 0, profile);
  CHECK_FALSE(d.skipped);
  CHECK(d.holds);
  // For the indifferent agents the antecedent fails (base set is all of
  // Z*, which is not their max set), so the check is skipped.
  DeviationCheck d1 = lemma11_deviation_check(mech, c, F_M, 1, 0, profile);
  CHECK(d1.skipped);

  // Mutating one deviation outcome breaks equilibrium or the inclusion.
  Mechanism bad = mech;
  bad.table[bad.flat_index({1, 0, 0})] = unit_lottery(c, 1);
  bool still_ne = is_pure_ne(bad, c, 0, profile);
  DeviationCheck db = lemma11_deviation_check(bad, c, F_M, 0, 0, profile);
  CHECK((!still_ne || !db.holds));
}

TEST_CASE("oversized profile spaces are rejected up front") {
  Environment env = make_env(3, {"s"}, {"a", "b"});
  set_u_all(env, 0, {1, 0});
  Mechanism huge;
  for (int i = 0; i < 3; ++i) {
    std::vector<std::string> names;
    for (int k = 0; k < 101; ++k) names.push_back("m" + std::to_string(k));
    huge.messages.push_back(std::move(names));
  }
  CHECK(huge.profile_count() > kMaxEnumerableProfiles);
  CHECK_THROWS_AS(pure_ne(huge, env, 0), Error);
  CHECK_THROWS_AS(rationalizable_set(huge, env, 0), Error);
}

TEST_CASE("fuzzer is deterministic and clean on a small run") {
  FuzzConfig cfg;
  cfg.count = 40;
  cfg.seed = 2024;
  FuzzReport a = necessity_fuzz(cfg);
  FuzzReport b = necessity_fuzz(cfg);
  CHECK(a.instances == 40);
  CHECK(a.violations.empty());
  CHECK(a.with_nonempty_pne == b.with_nonempty_pne);
  CHECK(a.single_valued == b.single_valued);
  CHECK(a.supports_checked == b.supports_checked);
  CHECK(a.with_nonempty_pne > 0);
}

TEST_CASE("mechanism json round trip") {
  std::mt19937_64 rng(173);
  Environment env = RandomModel::environment(rng, 3, 2, 3);
  Mechanism mech = RandomModel::mechanism(rng, env, 3);
  MechanismFile round = parse_mechanism(emit_mechanism(mech, env, true));
  CHECK(round.mech.messages == mech.messages);
  REQUIRE(round.mech.table.size() == mech.table.size());
  for (std::size_t p = 0; p < mech.table.size(); ++p) {
    CHECK(round.mech.table[p] == mech.table[p]);
  }
  CHECK(round.env.outcome_names() == env.outcome_names());
  // Without an embedded environment a fallback is required.
  std::string bare = emit_mechanism(mech, env, false);
  CHECK_THROWS_AS(parse_mechanism(bare), Error);
  MechanismFile with_fallback = parse_mechanism(bare, &env);
  CHECK(with_fallback.mech.messages == mech.messages);
}
