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
#include <map>
#include <random>

#include "implkit/fuzz.hpp"
#include "implkit/max_sets.hpp"
#include "support/builders.hpp"

using namespace implkit;
using namespace implkit::testing;

namespace {

// Applies a strictly increasing per-(agent, state) relabeling of utility
// levels, preserving every order comparison.
Environment monotone_transform(const Environment& env, std::mt19937_64& rng) {
  Environment out = env;
  for (int i = 0; i < env.agents(); ++i) {
    for (int t = 0; t < env.num_states(); ++t) {
      std::map<Rational, Rational> remap;
      for (int z = 0; z < env.num_outcomes(); ++z) {
        remap[env.utility(i, t, z)] = Rational(0);
      }
      Rational level(static_cast<long>(rng() % 7) - 3,
                     static_cast<long>(rng() % 3) + 1);
      for (auto& [from, to] : remap) {
        level += Rational(static_cast<long>(rng() % 5) + 1,
                          static_cast<long>(rng() % 4) + 1);
        to = level;
      }
      for (int z = 0; z < env.num_outcomes(); ++z) {
        out.set_utility(i, t, z, remap[env.utility(i, t, z)]);
      }
    }
  }
  return out;
}

Environment all_indifferent_at_beta() {
  Environment env = make_env(3, {"alpha", "beta"}, {"a", "b", "c"});
  set_u_all(env, 0, {2, 1, 0});
  set_u_all(env, 1, {1, 1, 1});
  return env;
}

}  // namespace

TEST_CASE("i-theta-max set on the defining examples") {
  // A singleton that is a global top for everyone else.
  Environment env = make_env(3, {"s"}, {"a", "b"});
  set_u(env, 0, 0, {0, 1});
  set_u(env, 1, 0, {1, 0});
  set_u(env, 2, 0, {1, 0});
  CHECK(is_i_theta_max_set(env, {0}, 0, 0));
  // Z at a state where someone is not indifferent.
  CHECK_FALSE(is_i_theta_max_set(env, {0, 1}, 0, 0));
  // The one-state instance with a bottomed-out agent.
  Environment c = env_c();
  CHECK(is_i_theta_max_set(c, {0}, 0, 0));
  CHECK_THROWS_AS(is_i_theta_max_set(c, {}, 0, 0), Error);
}

TEST_CASE("z_star branches") {
  // Heterogeneous tops, no all-indifferent state: Z* is all of Z.
  Environment env = env_a();
  Scc F{{{0}, {1}}};
  CHECK(z_star(env, F) == std::vector<int>{0, 1});
  // All indifferent at beta: Z* collapses to the union of values.
  Environment env2 = all_indifferent_at_beta();
  Scc F2{{{0}, {1}}};
  CHECK(z_star(env2, F2) == std::vector<int>{0, 1});
  // The union is always sandwiched.
  std::mt19937_64 rng(41);
  for (int k = 0; k < 100; ++k) {
    Environment renv = RandomModel::environment(rng, 3, 3, 3);
    Scc rF = RandomModel::scc(rng, renv);
    std::vector<int> zs = z_star(renv, rF);
    std::vector<int> u;
    for (const auto& v : rF.choice) u = set_union(u, v);
    CHECK(is_subset(u, zs));
    CHECK(static_cast<int>(zs.size()) <= renv.num_outcomes());
  }
}

TEST_CASE("i-Z*-theta-max sets and lambda states") {
  Environment env = all_indifferent_at_beta();
  Scc F{{{0}, {1}}};
  MaxSetCache cache(env, F);
  REQUIRE(cache.zstar() == std::vector<int>{0, 1});
  // E = Z* at the all-indifferent state.
  CHECK(cache.is_i_zstar_theta_max({0, 1}, 0, 1));
  std::vector<int> lam = cache.lambda_states({0, 1}, 0);
  CHECK(std::binary_search(lam.begin(), lam.end(), 1));
  // E with an element i strictly ranks below another fails internally.
  CHECK_FALSE(cache.is_i_zstar_theta_max({0, 1}, 0, 0));
  // E outside Z* is rejected.
  CHECK_THROWS_AS(cache.is_i_zstar_theta_max({2}, 0, 0), Error);

  Environment c = env_c();
  Scc Fc{{{0}}};
  MaxSetCache cc(c, Fc);
  CHECK(cc.zstar() == std::vector<int>{0, 1});
  CHECK(cc.lambda_states({0}, 0) == std::vector<int>{0});
}

TEST_CASE("theta_i_theta examples and definitional oracle") {
  // F(theta) with two strictly ranked outcomes is never internally max.
  Environment env = make_env(3, {"s1", "s2"}, {"a", "b"});
  set_u_all(env, 0, {1, 0});
  set_u_all(env, 1, {1, 0});
  Scc F{{{0, 1}, {0}}};
  MaxSetCache cache(env, F);
  CHECK(cache.theta_i_theta(0, 0).empty());

  // One all-indifferent state with F = Z*: reflexive.
  Environment flat = make_env(3, {"s"}, {"a", "b"});
  set_u_all(flat, 0, {1, 1});
  Scc Ff{{{0, 1}}};
  MaxSetCache cf(flat, Ff);
  CHECK(cf.theta_i_theta(0, 0) == std::vector<int>{0});

  // Random two-state instances against a from-scratch scan.
  std::mt19937_64 rng(43);
  for (int k = 0; k < 100; ++k) {
    Environment renv = RandomModel::environment(rng, 3, 2, 3);
    Scc rF = RandomModel::scc(rng, renv);
    MaxSetCache rc(renv, rF);
    for (int i = 0; i < 3; ++i) {
      for (int t = 0; t < renv.num_states(); ++t) {
        std::vector<int> expect;
        for (int tp = 0; tp < renv.num_states(); ++tp) {
          const auto& Ft = rF.choice[t];
          // Conjunct 1: internal plateau + global top in Z* for others.
          bool plateau = true;
          for (int z : Ft) {
            if (renv.utility(i, tp, z) != renv.utility(i, tp, Ft.front())) {
              plateau = false;
            }
          }
          bool others_top = true;
          for (int j = 0; j < 3 && others_top; ++j) {
            if (j == i) continue;
            Rational top;
            bool first = true;
            for (int z : rc.zstar()) {
              if (first || renv.utility(j, tp, z) > top) {
                top = renv.utility(j, tp, z);
                first = false;
              }
            }
            for (int z : Ft) {
              if (renv.utility(j, tp, z) != top) others_top = false;
            }
          }
          bool nested = is_subset(Ft, rF.choice[tp]);
          if (plateau && others_top && nested) expect.push_back(tp);
        }
        CHECK(rc.theta_i_theta(i, t) == expect);
      }
    }
  }
}

TEST_CASE("xi family fixed points") {
  // Empty domain (a strictly ranked F(theta) is never internally max):
  // empty family.
  Environment env = make_env(3, {"s1", "s2"}, {"a", "b"});
  set_u_all(env, 0, {1, 0});
  set_u_all(env, 1, {1, 0});
  Scc F{{{0, 1}, {0}}};
  MaxSetCache cache(env, F);
  CHECK(cache.theta_i_theta(0, 0).empty());
  CHECK(cache.xi_family(0, 0).empty());

  // Single-state all-indifferent environment: {{theta}}.
  Environment flat = make_env(3, {"s"}, {"a", "b"});
  set_u_all(flat, 0, {1, 1});
  Scc Ff{{{0, 1}}};
  MaxSetCache cf(flat, Ff);
  std::vector<std::vector<int>> fam = cf.xi_family(0, 0);
  REQUIRE(fam.size() == 1);
  CHECK(fam[0] == std::vector<int>{0});

  // Every returned K is a fixed point of the defining map.
  std::mt19937_64 rng(47);
  for (int k = 0; k < 150; ++k) {
    Environment renv = RandomModel::environment(rng, 3, 3, 3);
    Scc rF = RandomModel::scc(rng, renv);
    MaxSetCache rc(renv, rF);
    for (int i = 0; i < 3; ++i) {
      for (int t = 0; t < renv.num_states(); ++t) {
        std::vector<int> domain = rc.theta_i_theta(i, t);
        std::vector<int> base = rc.base_set(i, t);
        for (const auto& K : rc.xi_family(i, t)) {
          std::vector<int> inner = base;
          for (int tp : K) inner = set_intersect(inner, rF.choice[tp]);
          REQUIRE_FALSE(inner.empty());
          std::vector<int> img =
              set_intersect(domain, rc.lambda_states(inner, i));
          CHECK(img == K);
        }
      }
    }
  }
}

TEST_CASE("xi cap is enforced") {
  Environment flat = make_env(3, {"s1", "s2"}, {"a", "b"});
  set_u_all(flat, 0, {1, 1});
  set_u_all(flat, 1, {1, 1});
  Scc F{{{0, 1}, {0, 1}}};
  MaxSetCache cache(flat, F);
  REQUIRE(cache.theta_i_theta(0, 0).size() == 2);
  CHECK_THROWS_AS(cache.xi_family(0, 0, /*cap=*/1), Error);
}

TEST_CASE("iterative member lands inside the family") {
  std::mt19937_64 rng(53);
  int found = 0, chains = 0;
  for (int k = 0; k < 200; ++k) {
    Environment renv = RandomModel::environment(rng, 3, 3, 3);
    Scc rF = RandomModel::scc(rng, renv);
    MaxSetCache rc(renv, rF);
    for (int i = 0; i < 3; ++i) {
      for (int t = 0; t < renv.num_states(); ++t) {
        auto member = rc.xi_iterative_member(i, t);
        if (!member) continue;
        ++found;
        auto fam = rc.xi_family(i, t);
        CHECK(std::find(fam.begin(), fam.end(), *member) != fam.end());

        // Replay the forward chain: under the argmin hypothesis it grows
        // monotonically to the returned member.
        std::vector<int> base = rc.base_set(i, t);
        if (!rc.f_theta_in_zstar_argmin(i, t)) continue;
        ++chains;
        std::vector<int> domain = rc.theta_i_theta(i, t);
        std::vector<int> K;
        for (int tp : domain) {
          if (rc.is_i_zstar_theta_max(base, i, tp)) K.push_back(tp);
        }
        for (int step = 0; step < renv.num_states() + 2; ++step) {
          std::vector<int> inner = base;
          for (int tp : K) inner = set_intersect(inner, rF.choice[tp]);
          std::vector<int> next;
          if (!inner.empty()) {
            for (int tp : domain) {
              if (rc.is_i_zstar_theta_max(inner, i, tp)) next.push_back(tp);
            }
          }
          CHECK(is_subset(K, next));
          if (next == K) break;
          K = std::move(next);
        }
        CHECK(K == *member);
      }
    }
  }
  CHECK(found > 0);
  CHECK(chains > 0);
}

TEST_CASE("refined scf contour set branches") {
  Environment c = env_c();
  Scf f{{0}};
  LhatSet L = lhat_scf(c, f, 0, 0);
  CHECK(L.first_branch);
  CHECK(L.poly.ground == std::vector<int>{0});
  // A strict top for i goes to the plain contour set over the simplex.
  Environment env = make_env(3, {"s"}, {"a", "b"});
  set_u_all(env, 0, {1, 0});
  Scf ftop{{0}};
  LhatSet Ltop = lhat_scf(env, ftop, 0, 0);
  CHECK_FALSE(Ltop.first_branch);
  CHECK(vertices(Ltop.poly).v.size() == 2);  // the cut is vacuous
  // All-indifferent state: argmin holds trivially, the max-set test on
  // Z = L decides.
  Environment flat = make_env(3, {"s"}, {"a", "b"});
  set_u_all(flat, 0, {1, 1});
  LhatSet Lflat = lhat_scf(flat, ftop, 0, 0);
  CHECK(Lflat.first_branch);  // Z is a max set here
  CHECK(Lflat.poly.ground == std::vector<int>{0});
}

TEST_CASE("reachable outcome set: closed form vs support union") {
  Environment c = env_c();
  Scf f{{0}};
  CHECK(gamma_hat(c, f, 0, 0) == std::vector<int>{0});
  // Chosen outcome not an argmin: everything is reachable.
  Environment env = make_env(3, {"s"}, {"a", "b", "c"});
  set_u_all(env, 0, {0, 1, 2});
  Scf fmid{{1}};
  CHECK(gamma_hat(env, fmid, 0, 0) == std::vector<int>{0, 1, 2});
  // Argmin but not a max set: the weak lower contour set.
  Environment env2 = make_env(3, {"s"}, {"a", "b", "c"});
  set_u(env2, 0, 0, {0, 0, 1});
  set_u(env2, 1, 0, {2, 1, 0});
  set_u(env2, 2, 0, {2, 1, 0});
  Scf f2{{0}};
  CHECK(gamma_hat(env2, f2, 0, 0) == std::vector<int>{0, 1});

  // Exact agreement of both routes across random environments.
  std::mt19937_64 rng(59);
  for (int k = 0; k < 200; ++k) {
    Environment renv = RandomModel::environment(rng, 3, 3, 3);
    Scf rf = RandomModel::scf(rng, renv);
    for (int i = 0; i < 3; ++i) {
      for (int t = 0; t < renv.num_states(); ++t) {
        CHECK(gamma_hat_support_union(renv, rf, i, t) ==
              gamma_hat_closed_form(renv, rf, i, t));
      }
    }
  }
}

TEST_CASE("E-F contour agrees with the scf one on single-valued input") {
  std::mt19937_64 rng(61);
  for (int k = 0; k < 100; ++k) {
    Environment renv = RandomModel::environment(rng, 3, 3, 3);
    Scf rf = RandomModel::scf(rng, renv);
    Scc rF = scc_from_scf(rf);
    for (int i = 0; i < 3; ++i) {
      for (int t = 0; t < renv.num_states(); ++t) {
        LhatSet a = lhat_scf(renv, rf, i, t);
        LhatSet b = lhat_scc_EF(renv, rF, i, t, rf.choice[t]);
        CHECK(a.first_branch == b.first_branch);
        CHECK(a.poly.ground == b.poly.ground);
        CHECK(a.poly.cut.has_value() == b.poly.cut.has_value());
        if (a.poly.cut) {
          CHECK(a.poly.cut->coeff == b.poly.cut->coeff);
          CHECK(a.poly.cut->bound == b.poly.cut->bound);
        }
      }
    }
  }
  // Singleton branch at an outcome outside F(theta) is impossible.
  Environment c = env_c();
  Scc Fc{{{0}}};
  LhatSet L = lhat_scc_EF(c, Fc, 0, 0, 1);
  CHECK_FALSE(L.first_branch);
}

TEST_CASE("A-B contour branches") {
  // Degenerate single-valued correspondence: first branch collapses to {a}.
  Environment c = env_c();
  Scc Fc{{{0}}};
  MaxSetCache cache(c, Fc);
  LhatSet L0 = lhat_AB(cache, 0, 0);
  CHECK(L0.first_branch);
  CHECK(L0.poly.ground == std::vector<int>{0});
  // Other agents: second branch with a vacuous cut over Z*.
  LhatSet L1 = lhat_AB(cache, 1, 0);
  CHECK_FALSE(L1.first_branch);
  CHECK(L1.poly.ground == std::vector<int>{0, 1});

  // F(theta) off the argmin: plain cut simplex over Z*.
  Environment env = make_env(3, {"s1", "s2"}, {"a", "b", "c"});
  set_u_all(env, 0, {0, 1, 2});
  set_u_all(env, 1, {2, 1, 0});
  Scc F{{{2}, {0}}};
  MaxSetCache cache2(env, F);
  LhatSet L2 = lhat_AB(cache2, 0, 0);
  CHECK_FALSE(L2.first_branch);
  REQUIRE(L2.poly.cut.has_value());
  CHECK(L2.poly.cut->bound == Rational(2));
  CHECK(gamma_hat_AB(cache2, 0, 0) == cache2.zstar());
}

TEST_CASE("A-B reachable set: dual routes agree on random sccs") {
  std::mt19937_64 rng(67);
  for (int k = 0; k < 200; ++k) {
    Environment renv = RandomModel::environment(rng, 3, 3, 3);
    Scc rF = RandomModel::scc(rng, renv);
    MaxSetCache cache(renv, rF);
    for (int i = 0; i < 3; ++i) {
      for (int t = 0; t < renv.num_states(); ++t) {
        CHECK(gamma_hat_AB_support_union(cache, i, t) ==
              gamma_hat_AB_closed_form(cache, i, t));
      }
    }
  }
}

TEST_CASE("C-D contour branches") {
  // On the single-valued instance the C-D first branch needs a inside the
  // argmin part of F(theta).
  Environment c = env_c();
  Scc Fc{{{0}}};
  MaxSetCache cache(c, Fc);
  LhatSet L = lhat_CD(cache, 0, 0, 0);
  CHECK(L.first_branch);
  CHECK(L.poly.ground == std::vector<int>{0});
  LhatSet Lb = lhat_CD(cache, 0, 0, 1);
  CHECK_FALSE(Lb.first_branch);

  // When F(theta) is inside the Z*-argmin and a is in F(theta), the C-D
  // domain coincides with the A-B one, and so do the sets.
  std::mt19937_64 rng(71);
  for (int k = 0; k < 150; ++k) {
    Environment renv = RandomModel::environment(rng, 3, 2, 3);
    Scc rF = RandomModel::scc(rng, renv);
    MaxSetCache rc(renv, rF);
    for (int i = 0; i < 3; ++i) {
      for (int t = 0; t < renv.num_states(); ++t) {
        if (!rc.f_theta_in_zstar_argmin(i, t)) continue;
        for (int a : rF.choice[t]) {
          LhatSet ab = lhat_AB(rc, i, t);
          LhatSet cd = lhat_CD(rc, i, t, a);
          CHECK(ab.first_branch == cd.first_branch);
          if (ab.first_branch) {
            CHECK(ab.poly.ground == cd.poly.ground);
          }
        }
      }
    }
  }
}

TEST_CASE("outcome-set analogue of the A-B contour") {
  Environment c = env_c();
  Scc Fc{{{0}}};
  MaxSetCache cache(c, Fc);
  CHECK(lhat_zstar_AB(cache, 0, 0, 0) == std::vector<int>{0});
  // Otherwise-branch equals Z* intersected with the weak contour set.
  CHECK(lhat_zstar_AB(cache, 1, 0, 1) ==
        set_intersect(cache.zstar(), lower_contour_Z(c, 1, 0, 1)));
  // The strict variant never contains the anchor outcome.
  std::mt19937_64 rng(73);
  for (int k = 0; k < 100; ++k) {
    Environment renv = RandomModel::environment(rng, 3, 2, 3);
    Scc rF = RandomModel::scc(rng, renv);
    MaxSetCache rc(renv, rF);
    for (int i = 0; i < 3; ++i) {
      for (int t = 0; t < renv.num_states(); ++t) {
        for (int a : rF.choice[t]) {
          std::vector<int> s = slhat_zstar_AB(rc, i, t, a);
          CHECK_FALSE(std::binary_search(s.begin(), s.end(), a));
          CHECK(is_subset(s, lhat_zstar_AB(rc, i, t, a)));
        }
      }
    }
  }
}

TEST_CASE("verdicts are ordinal-invariant") {
  std::mt19937_64 rng(79);
  for (int k = 0; k < 60; ++k) {
    Environment env = RandomModel::environment(rng, 3, 3, 3);
    Scc F = RandomModel::scc(rng, env);
    Environment env2 = monotone_transform(env, rng);
    CHECK(z_star(env, F) == z_star(env2, F));
    MaxSetCache c1(env, F), c2(env2, F);
    for (int i = 0; i < 3; ++i) {
      for (int t = 0; t < env.num_states(); ++t) {
        CHECK(is_i_theta_max_set(env, F.choice[t], i, t) ==
              is_i_theta_max_set(env2, F.choice[t], i, t));
        CHECK(c1.theta_i_theta(i, t) == c2.theta_i_theta(i, t));
        CHECK(c1.xi_family(i, t) == c2.xi_family(i, t));
      }
    }
  }
}
