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

#include "implkit/canonical.hpp"

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

ChallengeScheme build_scheme(const Environment& env,
                             const std::vector<ContourPolytope>& polys) {
  // polys is [j][theta] flattened.
  ChallengeScheme s;
  s.agents = env.agents();
  s.states = env.num_states();
  s.lotteries.reserve(static_cast<std::size_t>(s.agents) * s.states * s.states);
  s.values.reserve(s.lotteries.capacity());
  for (int j = 0; j < s.agents; ++j) {
    for (int t = 0; t < s.states; ++t) {
      const ContourPolytope& P =
          polys[static_cast<std::size_t>(j) * s.states + t];
      for (int tp = 0; tp < s.states; ++tp) {
        auto [value, arg] = argmax_linear(P, utility_row(env, j, tp));
        s.values.push_back(std::move(value));
        s.lotteries.push_back(std::move(arg));
      }
    }
  }
  return s;
}

}  // namespace

ChallengeScheme build_phi(const Environment& env, const Scf& f) {
  std::vector<ContourPolytope> polys;
  for (int j = 0; j < env.agents(); ++j) {
    for (int t = 0; t < env.num_states(); ++t) {
      polys.push_back(lhat_scf(env, f, j, t).poly);
    }
  }
  return build_scheme(env, polys);
}

ChallengeScheme build_psi(const Environment& env, const Scc& F, int xi_cap) {
  MaxSetCache cache(env, F);
  std::vector<ContourPolytope> polys;
  for (int j = 0; j < env.agents(); ++j) {
    for (int t = 0; t < env.num_states(); ++t) {
      polys.push_back(lhat_AB(cache, j, t, xi_cap).poly);
    }
  }
  return build_scheme(env, polys);
}

EpsilonY build_epsilon_y(const Environment& env, const Scf& f, int j,
                         int theta) {
  int fz = f.choice[theta];
  std::vector<int> amin = env.argmin_utility(j, theta);
  EpsilonY out;
  if (std::binary_search(amin.begin(), amin.end(), fz)) {
    out.eps = Rational(1, 2);
    out.y = unit_lottery(env, fz);
  } else {
    int y0 = amin.front();
    out.y = unit_lottery(env, y0);
    Rational ymin = env.utility(j, theta, y0);
    Rational top = env.utility(j, theta, env.argmax_utility(j, theta).front());
    out.eps = (env.utility(j, theta, fz) - ymin) / (top - ymin) / Rational(2);
  }
  // Recheck the defining property on every vertex of the reachable-set
  // simplex before handing the constants out.
  LhatSet L = lhat_scf(env, f, j, theta);
  std::vector<int> gamma = gamma_hat(env, f, j, theta);
  for (int z : gamma) {
    Lottery mix;
    mix.p.assign(env.num_outcomes(), Rational(0));
    Rational rest = Rational(1) - out.eps;
    for (int w = 0; w < env.num_outcomes(); ++w) {
      mix.p[w] = rest * out.y.p[w];
    }
    mix.p[z] += out.eps;
    if (!L.poly.contains(mix)) {
      throw Error(Errc::kVerificationFailed,
                  "epsilon-y mixture left the refined contour set at (" +
                      std::to_string(j) + ", " + env.state_name(theta) + ")");
    }
  }
  return out;
}

namespace {

EpsilonY build_epsilon_y_AB(MaxSetCache& cache, int j, int theta, int xi_cap) {
  const Environment& env = cache.env();
  const Scc& F = cache.scc();
  LhatSet L = lhat_AB(cache, j, theta, xi_cap);
  std::vector<int> gamma = gamma_hat_AB(cache, j, theta, xi_cap);
  EpsilonY out;
  if (cache.f_theta_in_zstar_argmin(j, theta)) {
    // Mirrors the argmin cases: the contour set is the whole simplex over
    // the reachable set, any half weight works.
    out.eps = Rational(1, 2);
    out.y = unif(env, F.choice[theta]);
  } else {
    int y0 = env.argmin_in(j, theta, cache.zstar()).front();
    out.y = unit_lottery(env, y0);
    Rational ymin = env.utility(j, theta, y0);
    Rational top = env.utility(
        j, theta, env.argmax_in(j, theta, cache.zstar()).front());
    Rational ref = expected_utility(env, j, theta, unif(env, F.choice[theta]));
    out.eps = (ref - ymin) / (top - ymin) / Rational(2);
  }
  for (int z : gamma) {
    Lottery mix;
    mix.p.assign(env.num_outcomes(), Rational(0));
    Rational rest = Rational(1) - out.eps;
    for (int w = 0; w < env.num_outcomes(); ++w) {
      mix.p[w] = rest * out.y.p[w];
    }
    mix.p[z] += out.eps;
    if (!L.poly.contains(mix)) {
      throw Error(Errc::kVerificationFailed,
                  "A-B epsilon-y mixture left the contour set at (" +
                      std::to_string(j) + ", " + env.state_name(theta) + ")");
    }
  }
  return out;
}

}  // namespace

CanonicalMechanism build_canonical_scf(const Environment& env, const Scf& f,
                                       int K) {
  if (K < 2) throw Error(Errc::kTruncationTooSmall, "K must be at least 2");
  CanonicalMechanism mech;
  mech.variant = CanonicalVariant::kScf;
  mech.truncation = K;
  mech.env = env;
  mech.F = scc_from_scf(f);
  mech.base.resize(env.num_outcomes());
  for (int z = 0; z < env.num_outcomes(); ++z) mech.base[z] = z;
  mech.challenges = build_phi(env, f);
  for (int j = 0; j < env.agents(); ++j) {
    for (int t = 0; t < env.num_states(); ++t) {
      mech.eps_y.push_back(build_epsilon_y(env, f, j, t));
      mech.gamma_sets.push_back(gamma_hat(env, f, j, t));
    }
  }
  return mech;
}

CanonicalMechanism build_canonical_AB(const Environment& env, const Scc& F,
                                      int K, int xi_cap) {
  if (K < 2) throw Error(Errc::kTruncationTooSmall, "K must be at least 2");
  CanonicalMechanism mech;
  mech.variant = CanonicalVariant::kAB;
  mech.truncation = K;
  mech.env = env;
  mech.F = F;
  MaxSetCache cache(env, F);
  mech.base = cache.zstar();
  mech.challenges = build_psi(env, F, xi_cap);
  for (int j = 0; j < env.agents(); ++j) {
    for (int t = 0; t < env.num_states(); ++t) {
      mech.eps_y.push_back(build_epsilon_y_AB(cache, j, t, xi_cap));
      mech.gamma_sets.push_back(gamma_hat_AB(cache, j, t, xi_cap));
    }
  }
  return mech;
}

Lottery CanonicalMechanism::outcome(
    const std::vector<CanonicalMessage>& m) const {
  const int I = env.agents();
  // Case (1): consensus on (theta, 1) in the first two dimensions.
  {
    bool consensus = true;
    for (int i = 1; i < I; ++i) {
      if (m[i].theta != m[0].theta || m[i].k2 != 1) consensus = false;
    }
    if (consensus && m[0].k2 == 1) {
      if (variant == CanonicalVariant::kScf) {
        return unit_lottery(env, F.choice[m[0].theta].front());
      }
      return unif(env, F.choice[m[0].theta]);
    }
  }
  // Case (2): exactly one deviator j from a consensus of the others.
  for (int j = 0; j < I; ++j) {
    bool others_agree = true;
    int agreed = -1;
    for (int i = 0; i < I && others_agree; ++i) {
      if (i == j) continue;
      if (m[i].k2 != 1) {
        others_agree = false;
      } else if (agreed == -1) {
        agreed = m[i].theta;
      } else if (m[i].theta != agreed) {
        others_agree = false;
      }
    }
    if (!others_agree) continue;
    bool j_deviates = m[j].theta != agreed || m[j].k2 != 1;
    if (!j_deviates) continue;

    const Lottery& phi = challenges.at(j, agreed, m[j].theta);
    const EpsilonY& ey = eps_y_at(j, agreed);
    const std::vector<int>& gamma = gamma_set(j, agreed);
    int pick = m[j].gamma[agreed];
    Lottery uniform_part = unif(env, gamma);

    Rational k2(m[j].k2);
    Rational k3(m[j].k3);
    Rational w_phi = Rational(1) - Rational(1) / k2;
    Rational w_pick = Rational(1) / k2 * ey.eps * (Rational(1) - Rational(1) / k3);
    Rational w_unif = Rational(1) / k2 * ey.eps / k3;
    Rational w_y = Rational(1) / k2 * (Rational(1) - ey.eps);

    Lottery out;
    out.p.assign(env.num_outcomes(), Rational(0));
    for (int z = 0; z < env.num_outcomes(); ++z) {
      out.p[z] = w_phi * phi.p[z] + w_unif * uniform_part.p[z] +
                 w_y * ey.y.p[z];
    }
    out.p[pick] += w_pick;
    return out;
  }
  // Case (3): the integer game; the largest-indexed maximizer of k2 wins.
  int jstar = 0;
  for (int i = 1; i < I; ++i) {
    if (m[i].k2 >= m[jstar].k2) jstar = i;
  }
  Rational k2(m[jstar].k2);
  Rational w_b = Rational(1) - Rational(1) / k2;
  Lottery uniform_part = unif(env, base);
  Lottery out;
  out.p.assign(env.num_outcomes(), Rational(0));
  for (int z = 0; z < env.num_outcomes(); ++z) {
    out.p[z] = (Rational(1) / k2) * uniform_part.p[z];
  }
  out.p[m[jstar].b] += w_b;
  return out;
}

Lottery outcome_g(const CanonicalMechanism& mech,
                  const std::vector<CanonicalMessage>& m) {
  return mech.outcome(m);
}

std::vector<CanonicalMessage> CanonicalMechanism::truth_profile(
    int theta) const {
  std::vector<CanonicalMessage> profile;
  for (int i = 0; i < env.agents(); ++i) {
    CanonicalMessage msg;
    msg.theta = theta;
    msg.k2 = 1;
    msg.k3 = 1;
    for (int t = 0; t < env.num_states(); ++t) {
      msg.gamma.push_back(gamma_set(i, t).front());
    }
    msg.b = base.front();
    profile.push_back(std::move(msg));
  }
  return profile;
}

std::vector<CanonicalMessage> CanonicalMechanism::messages_for_agent(
    int i) const {
  std::vector<CanonicalMessage> out;
  const int S = env.num_states();
  std::vector<std::vector<int>> picks(S);
  std::size_t combos = 1;
  for (int t = 0; t < S; ++t) {
    picks[t] = gamma_set(i, t);
    combos *= picks[t].size();
  }
  std::size_t total = static_cast<std::size_t>(S) * truncation * truncation *
                      combos * base.size();
  if (total > 200000) {
    throw Error(Errc::kMechanismTooLarge,
                "canonical message space has " + std::to_string(total) +
                    " entries for one agent");
  }
  std::vector<int> idx(S, 0);
  for (int t = 0; t < S; ++t) {
    for (int k2 = 1; k2 <= truncation; ++k2) {
      for (int k3 = 1; k3 <= truncation; ++k3) {
        std::fill(idx.begin(), idx.end(), 0);
        while (true) {
          for (int b : base) {
            CanonicalMessage msg;
            msg.theta = t;
            msg.k2 = k2;
            msg.k3 = k3;
            for (int s = 0; s < S; ++s) msg.gamma.push_back(picks[s][idx[s]]);
            msg.b = b;
            out.push_back(std::move(msg));
          }
          int carry = S - 1;
          while (carry >= 0) {
            if (++idx[carry] < static_cast<int>(picks[carry].size())) break;
            idx[carry] = 0;
            --carry;
          }
          if (carry < 0) break;
        }
      }
    }
  }
  return out;
}

std::string CanonicalMechanism::message_name(int i,
                                             const CanonicalMessage& m) const {
  (void)i;
  std::string name = env.state_name(m.theta) + ":" + std::to_string(m.k2) +
                     ":" + std::to_string(m.k3) + ":";
  for (int t = 0; t < env.num_states(); ++t) {
    if (t > 0) name += ".";
    name += env.outcome_name(m.gamma[t]);
  }
  name += ":" + env.outcome_name(m.b);
  return name;
}

Mechanism CanonicalMechanism::to_mechanism(std::size_t max_profiles) const {
  Mechanism out;
  std::vector<std::vector<CanonicalMessage>> msgs;
  std::size_t profiles = 1;
  for (int i = 0; i < env.agents(); ++i) {
    msgs.push_back(messages_for_agent(i));
    profiles *= msgs.back().size();
    if (profiles > max_profiles) {
      throw Error(Errc::kMechanismTooLarge,
                  "expanded canonical mechanism exceeds the profile guard");
    }
    std::vector<std::string> names;
    for (const auto& m : msgs.back()) names.push_back(message_name(i, m));
    out.messages.push_back(std::move(names));
  }
  out.table.reserve(profiles);
  std::vector<int> idx(env.agents(), 0);
  std::vector<CanonicalMessage> profile;
  while (true) {
    profile.clear();
    for (int i = 0; i < env.agents(); ++i) profile.push_back(msgs[i][idx[i]]);
    out.table.push_back(outcome(profile));
    int carry = env.agents() - 1;
    while (carry >= 0) {
      if (++idx[carry] < static_cast<int>(msgs[carry].size())) break;
      idx[carry] = 0;
      --carry;
    }
    if (carry < 0) break;
  }
  return out;
}

bool truth_profile_is_pne(const CanonicalMechanism& mech, int theta) {
  const Environment& env = mech.env;
  std::vector<CanonicalMessage> profile = mech.truth_profile(theta);
  Lottery baseline = mech.outcome(profile);
  for (int i = 0; i < env.agents(); ++i) {
    Rational stay = expected_utility(env, i, theta, baseline);
    for (const CanonicalMessage& dev : mech.messages_for_agent(i)) {
      std::vector<CanonicalMessage> alt = profile;
      alt[i] = dev;
      if (expected_utility(env, i, theta, mech.outcome(alt)) > stay) {
        return false;
      }
    }
  }
  return true;
}

std::variant<Certificate, Refutation> certify_scf(const Environment& env,
                                                  const Scf& f) {
  // C1: the monotonicity condition itself.
  CheckReport c1 = check_lhat_scf(env, f);
  if (c1.verdict == Verdict::kFails) {
    return Refutation{"C1", *c1.witness};
  }
  // C2: the full outcome set is nobody's max set.
  std::vector<int> all(env.num_outcomes());
  for (int z = 0; z < env.num_outcomes(); ++z) all[z] = z;
  for (int i = 0; i < env.agents(); ++i) {
    if (is_i_max_set(env, all, i)) {
      CheckWitness w;
      w.agent = i;
      w.note = "Z is a max set for this agent";
      return Refutation{"C2", w};
    }
  }
  // C3: a whistle-blower with a strictly better challenge vertex for every
  // pair of states that disagree on the chosen outcome.
  Certificate cert;
  for (int t = 0; t < env.num_states(); ++t) {
    for (int ts = 0; ts < env.num_states(); ++ts) {
      if (f.choice[t] == f.choice[ts]) continue;
      bool found = false;
      for (int j = 0; j < env.agents() && !found; ++j) {
        LhatSet L = lhat_scf(env, f, j, t);
        Rational threshold = env.utility(j, ts, f.choice[t]);
        for (const Lottery& v : vertices(L.poly).v) {
          if (expected_utility(env, j, ts, v) > threshold) {
            cert.whistle_blowers.push_back({t, ts, j, v});
            found = true;
            break;
          }
        }
      }
      if (!found) {
        CheckWitness w;
        w.theta = t;
        w.theta_prime = ts;
        w.note = "no whistle-blower vertex exists";
        return Refutation{"C3", w};
      }
    }
  }
  // C4: a reachable set that is a max set at some state must collapse to the
  // outcome chosen there.
  for (int j = 0; j < env.agents(); ++j) {
    for (int t = 0; t < env.num_states(); ++t) {
      std::vector<int> gamma = gamma_hat(env, f, j, t);
      for (int ts = 0; ts < env.num_states(); ++ts) {
        if (!is_i_theta_max_set(env, gamma, j, ts)) continue;
        if (gamma.size() == 1 && gamma.front() == f.choice[ts]) continue;
        CheckWitness w;
        w.theta = t;
        w.theta_prime = ts;
        w.agent = j;
        w.note = "reachable set is a max set but not the chosen singleton";
        return Refutation{"C4", w};
      }
    }
  }
  return cert;
}

}  // namespace implkit
