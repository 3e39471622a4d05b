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

#include <random>

#include "implkit/fuzz.hpp"
#include "implkit/json_io.hpp"
#include "implkit/max_sets.hpp"
#include "implkit/ordinal.hpp"
#include "support/builders.hpp"

using namespace implkit;
using namespace implkit::testing;

namespace {

OrdinalEnvironment chain_env() {
  // a > b > c for everyone at the single state.
  OrdinalEnvironment oenv;
  oenv.agents = 3;
  oenv.states = {"s"};
  oenv.outcomes = {"a", "b", "c"};
  oenv.classes_by_agent.assign(3, {{{0}, {1}, {2}}});
  return oenv;
}

Environment target_for_chain(const std::vector<long>& values) {
  Environment env = make_env(3, {"s"}, {"a", "b", "c"});
  set_u_all(env, 0, values);
  return env;
}

bool contour_inside(const Environment& a, const Environment& b, int i, int t,
                    int z) {
  std::vector<int> all(a.num_outcomes());
  for (int w = 0; w < a.num_outcomes(); ++w) all[w] = w;
  ContourPolytope P = lower_contour_Y(a, i, t, unit_lottery(a, z), all);
  std::vector<Rational> target;
  for (int w = 0; w < b.num_outcomes(); ++w) {
    target.push_back(b.utility(i, t, w));
  }
  return contains_in_halfspace(P, target, b.utility(i, t, z)).contained;
}

}  // namespace

TEST_CASE("ranks on the three documented orders") {
  OrdinalEnvironment flat;
  flat.agents = 3;
  flat.states = {"s"};
  flat.outcomes = {"a", "b", "c"};
  flat.classes_by_agent.assign(3, {{{0, 1, 2}}});
  CHECK(ranks(flat, 0, 0) == std::vector<int>{1, 1, 1});

  OrdinalEnvironment chain = chain_env();
  CHECK(ranks(chain, 0, 0) == std::vector<int>{3, 2, 1});

  OrdinalEnvironment tied;
  tied.agents = 3;
  tied.states = {"s"};
  tied.outcomes = {"a", "b", "c"};
  tied.classes_by_agent.assign(3, {{{0, 1}, {2}}});
  CHECK(ranks(tied, 0, 0) == std::vector<int>{2, 2, 1});
}

TEST_CASE("rank representation represents") {
  std::mt19937_64 rng(179);
  for (int k = 0; k < 60; ++k) {
    Environment env = RandomModel::environment(rng, 3, 3, 4);
    OrdinalEnvironment oenv = ordinalize(env);
    CHECK(validate(oenv).ok);
    Environment rep = rank_representation(oenv);
    CHECK(represents(oenv, rep));
    CHECK(represents(oenv, env));
    // Ordinalizing the representation recovers the same classes.
    OrdinalEnvironment round = ordinalize(rep);
    for (int i = 0; i < 3; ++i) {
      for (int t = 0; t < env.num_states(); ++t) {
        CHECK(round.classes(i, t) == oenv.classes(i, t));
      }
    }
  }
}

TEST_CASE("ordinal serialization round trips") {
  std::mt19937_64 rng(181);
  for (int k = 0; k < 20; ++k) {
    Environment env = RandomModel::environment(rng, 3, 3, 3);
    OrdinalEnvironment oenv = ordinalize(env);
    Scc F = RandomModel::scc(rng, env);
    OrdinalFile round = parse_ordinal(emit_ordinal(oenv, &F));
    CHECK(round.oenv.agents == oenv.agents);
    CHECK(round.oenv.states == oenv.states);
    CHECK(round.oenv.outcomes == oenv.outcomes);
    for (int i = 0; i < 3; ++i) {
      for (int t = 0; t < oenv.num_states(); ++t) {
        CHECK(round.oenv.classes(i, t) == oenv.classes(i, t));
      }
    }
    REQUIRE(round.scc.has_value());
    CHECK(round.scc->choice == F.choice);
  }
}

TEST_CASE("ratio bounds on the documented instances") {
  Environment env = target_for_chain({0, 1, 2});
  auto [low, high] = rho_bounds(env, 0, 0, 1);
  CHECK(low == Rational(1, 2));
  CHECK(high == Rational(1, 2));
  CHECK_THROWS_AS(rho_bounds(env, 0, 0, 2), Error);  // top outcome
  CHECK_THROWS_AS(rho_bounds(env, 0, 0, 0), Error);  // bottom outcome

  Environment env4 = make_env(3, {"s"}, {"a", "b", "c", "d"});
  set_u_all(env4, 0, {0, 1, 2, 4});
  auto [low4, high4] = rho_bounds(env4, 0, 0, 1);
  CHECK(low4 == Rational(1, 4));
  CHECK(high4 == Rational(1, 2));
}

TEST_CASE("ratio bounds sandwich lottery membership") {
  std::mt19937_64 rng(191);
  int used = 0;
  for (int k = 0; k < 1500 && used < 200; ++k) {
    Environment env = RandomModel::environment(rng, 3, 1, 4, 5, 3);
    int i = static_cast<int>(rng() % 3);
    int z = static_cast<int>(rng() % env.num_outcomes());
    std::vector<int> amax = env.argmax_utility(i, 0);
    std::vector<int> amin = env.argmin_utility(i, 0);
    if (std::binary_search(amax.begin(), amax.end(), z) ||
        std::binary_search(amin.begin(), amin.end(), z)) {
      continue;
    }
    auto [low, high] = rho_bounds(env, i, 0, z);
    Lottery y = RandomModel::lottery(rng, env, 4);
    Rational su_mass, split_mass;
    const Rational& uz = env.utility(i, 0, z);
    for (int w = 0; w < env.num_outcomes(); ++w) {
      if (env.utility(i, 0, w) > uz) {
        su_mass += y.p[w];
        split_mass += y.p[w];
      } else if (env.utility(i, 0, w) < uz) {
        split_mass += y.p[w];
      }
    }
    if (split_mass.is_zero()) continue;  // y lives on the indifference class
    ++used;
    Rational ratio = su_mass / split_mass;
    bool member = expected_utility(env, i, 0, y) <= uz;
    if (member) CHECK(ratio <= high);
    if (ratio <= low) CHECK(member);
  }
  CHECK(used > 100);
}

TEST_CASE("bracketing representations on an all-indifferent order") {
  OrdinalEnvironment flat;
  flat.agents = 3;
  flat.states = {"s"};
  flat.outcomes = {"a", "b"};
  flat.classes_by_agent.assign(3, {{{0, 1}}});
  Environment target = make_env(3, {"s"}, {"a", "b"});
  set_u_all(target, 0, {7, 7});
  BracketingReps reps = bracketing_reps(flat, target);
  CHECK(reps.n == 1);
  // All containments are equalities here: check both directions.
  for (int i = 0; i < 3; ++i) {
    for (int z = 0; z < 2; ++z) {
      CHECK(contour_inside(reps.u_hat, target, i, 0, z));
      CHECK(contour_inside(target, reps.u_hat, i, 0, z));
      CHECK(contour_inside(target, reps.u_tilde, i, 0, z));
      CHECK(contour_inside(reps.u_tilde, target, i, 0, z));
    }
  }
}

TEST_CASE("bracketing representations on a strict chain") {
  OrdinalEnvironment chain = chain_env();
  Environment target = target_for_chain({0, 9, 10});
  // Outcome names run a > b > c in the chain: utilities must decrease, so
  // target (10, 9, 0).
  set_u_all(target, 0, {10, 9, 0});
  BracketingReps reps = bracketing_reps(chain, target);
  CHECK(represents(chain, reps.u_hat));
  CHECK(represents(chain, reps.u_tilde));
  for (int i = 0; i < 3; ++i) {
    for (int z = 0; z < 3; ++z) {
      CHECK(contour_inside(reps.u_hat, target, i, 0, z));
      CHECK(contour_inside(target, reps.u_tilde, i, 0, z));
    }
  }
  // The sandwich is strict somewhere: the target is not of the scaled form.
  bool strict = false;
  for (int i = 0; i < 3 && !strict; ++i) {
    for (int z = 0; z < 3 && !strict; ++z) {
      if (!contour_inside(target, reps.u_hat, i, 0, z)) strict = true;
      if (!contour_inside(reps.u_tilde, target, i, 0, z)) strict = true;
    }
  }
  CHECK(strict);
}

TEST_CASE("bracketing verified containments on random targets") {
  std::mt19937_64 rng(193);
  for (int k = 0; k < 25; ++k) {
    Environment seedenv = RandomModel::environment(rng, 3, 2, 3, 6);
    OrdinalEnvironment oenv = ordinalize(seedenv);
    BracketingReps reps = bracketing_reps(oenv, seedenv);
    CHECK(reps.n >= 1);
    for (int i = 0; i < 3; ++i) {
      for (int t = 0; t < seedenv.num_states(); ++t) {
        for (int z = 0; z < seedenv.num_outcomes(); ++z) {
          CHECK(contour_inside(reps.u_hat, seedenv, i, t, z));
          CHECK(contour_inside(seedenv, reps.u_tilde, i, t, z));
        }
      }
    }
  }
}

TEST_CASE("max-set verdicts agree across representations") {
  std::mt19937_64 rng(197);
  for (int k = 0; k < 25; ++k) {
    Environment seedenv = RandomModel::environment(rng, 3, 2, 3);
    OrdinalEnvironment oenv = ordinalize(seedenv);
    Environment rank = rank_representation(oenv);
    BracketingReps reps = bracketing_reps(oenv, rank);
    Scc F = RandomModel::scc(rng, rank);
    CHECK(z_star(rank, F) == z_star(reps.u_hat, F));
    CHECK(z_star(rank, F) == z_star(reps.u_tilde, F));
    MaxSetCache c1(rank, F), c2(reps.u_hat, F), c3(reps.u_tilde, F);
    for (int i = 0; i < 3; ++i) {
      for (int t = 0; t < rank.num_states(); ++t) {
        CHECK(c1.theta_i_theta(i, t) == c2.theta_i_theta(i, t));
        CHECK(c1.theta_i_theta(i, t) == c3.theta_i_theta(i, t));
        CHECK(c1.xi_family(i, t) == c2.xi_family(i, t));
        CHECK(c1.xi_family(i, t) == c3.xi_family(i, t));
      }
    }
  }
}

TEST_CASE("ordinal validation catches broken partitions") {
  OrdinalEnvironment oenv = chain_env();
  oenv.classes_by_agent[0][0] = {{0}, {1}};  // c missing
  CHECK_FALSE(validate(oenv).ok);
  oenv.classes_by_agent[0][0] = {{0, 1}, {1, 2}};  // b twice
  CHECK_FALSE(validate(oenv).ok);
  CHECK(validate(chain_env()).ok);
}
