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

#include "implkit/geometry.hpp"

#include <algorithm>

namespace implkit {

namespace {

Rational dot(const std::vector<Rational>& c, const Lottery& y) {
  Rational sum;
  for (std::size_t z = 0; z < y.p.size(); ++z) {
    if (!y.p[z].is_zero()) sum += c[z] * y.p[z];
  }
  return sum;
}

}  // namespace

bool ContourPolytope::contains(const Lottery& y) const {
  if (!y.is_valid()) return false;
  for (int z = 0; z < n_outcomes; ++z) {
    if (y.p[z].sign() > 0 &&
        !std::binary_search(ground.begin(), ground.end(), z)) {
      return false;
    }
  }
  if (cut) {
    return dot(cut->coeff, y) <= cut->bound;
  }
  return true;
}

std::vector<int> lower_contour_Z(const Environment& env, int i, int theta,
                                 int a) {
  std::vector<int> out;
  const Rational& ua = env.utility(i, theta, a);
  for (int z = 0; z < env.num_outcomes(); ++z) {
    if (ua >= env.utility(i, theta, z)) out.push_back(z);
  }
  return out;
}

std::vector<int> strict_lower_contour_Z(const Environment& env, int i,
                                        int theta, int a) {
  std::vector<int> out;
  const Rational& ua = env.utility(i, theta, a);
  for (int z = 0; z < env.num_outcomes(); ++z) {
    if (ua > env.utility(i, theta, z)) out.push_back(z);
  }
  return out;
}

std::vector<int> lower_contour_Z_of_set(const Environment& env, int i,
                                        int theta, const std::vector<int>& E) {
  if (E.empty()) throw Error(Errc::kEmptySet, "lower_contour_Z_of_set");
  std::vector<int> out;
  for (int z = 0; z < env.num_outcomes(); ++z) {
    bool in_all = true;
    const Rational& uz = env.utility(i, theta, z);
    for (int a : E) {
      if (!(env.utility(i, theta, a) >= uz)) {
        in_all = false;
        break;
      }
    }
    if (in_all) out.push_back(z);
  }
  return out;
}

ContourPolytope lower_contour_Y(const Environment& env, int i, int theta,
                                const Lottery& alpha,
                                const std::vector<int>& ground) {
  ContourPolytope P;
  P.n_outcomes = env.num_outcomes();
  P.ground = ground;
  std::sort(P.ground.begin(), P.ground.end());
  HalfspaceCut cut;
  cut.coeff.reserve(env.num_outcomes());
  for (int z = 0; z < env.num_outcomes(); ++z) {
    cut.coeff.push_back(env.utility(i, theta, z));
  }
  cut.bound = expected_utility(env, i, theta, alpha);
  P.cut = std::move(cut);
  return P;
}

VertexSet vertices(const ContourPolytope& P) {
  VertexSet vs;
  auto unit = [&](int z) {
    Lottery y;
    y.p.assign(P.n_outcomes, Rational(0));
    y.p[z] = Rational(1);
    return y;
  };
  if (!P.cut) {
    if (P.ground.empty()) throw Error(Errc::kEmptyPolytope, "empty ground");
    for (int z : P.ground) vs.v.push_back(unit(z));
    return vs;
  }
  const auto& c = P.cut->coeff;
  const auto& b = P.cut->bound;
  std::vector<int> feasible, infeasible;
  for (int z : P.ground) {
    (c[z] <= b ? feasible : infeasible).push_back(z);
  }
  if (feasible.empty()) {
    throw Error(Errc::kEmptyPolytope, "cut excludes every unit vertex");
  }
  for (int z : feasible) vs.v.push_back(unit(z));
  // Intersections of the cut hyperplane with edges from a feasible to an
  // infeasible unit vertex.  Weight lambda = (b - c_z)/(c_w - c_z) sits on
  // the infeasible endpoint w; lambda = 0 duplicates the unit vertex e_z and
  // is skipped.
  for (int z : feasible) {
    for (int w : infeasible) {
      Rational lambda = (b - c[z]) / (c[w] - c[z]);
      if (lambda.is_zero()) continue;
      Lottery y;
      y.p.assign(P.n_outcomes, Rational(0));
      y.p[z] = Rational(1) - lambda;
      y.p[w] = lambda;
      vs.v.push_back(std::move(y));
    }
  }
  return vs;
}

ContainmentResult contains_in_halfspace(const ContourPolytope& P,
                                        const std::vector<Rational>& c,
                                        const Rational& b) {
  VertexSet vs = vertices(P);
  for (const Lottery& v : vs.v) {
    if (dot(c, v) > b) {
      return {false, v};
    }
  }
  return {true, std::nullopt};
}

std::pair<Rational, Lottery> argmax_linear(const ContourPolytope& P,
                                           const std::vector<Rational>& c) {
  VertexSet vs = vertices(P);
  Rational best = dot(c, vs.v.front());
  std::size_t best_idx = 0;
  for (std::size_t k = 1; k < vs.v.size(); ++k) {
    Rational val = dot(c, vs.v[k]);
    if (val > best) {
      best = std::move(val);
      best_idx = k;
    }
  }
  return {best, vs.v[best_idx]};
}

Decomposition decompose_interior(const Lottery& gamma, const Lottery& eta,
                                 const std::vector<int>& E) {
  if (E.empty()) throw Error(Errc::kEmptySet, "decompose_interior");
  for (int z : E) {
    if (!(gamma.p[z].sign() > 0)) {
      throw Error(Errc::kNotInteriorLottery, "gamma lacks full support on E");
    }
  }
  for (std::size_t z = 0; z < gamma.p.size(); ++z) {
    bool in_E = std::binary_search(E.begin(), E.end(), static_cast<int>(z));
    if (in_E) continue;
    if (gamma.p[z].sign() > 0) {
      throw Error(Errc::kNotInteriorLottery, "gamma has support outside E");
    }
    if (eta.p[z].sign() > 0) {
      throw Error(Errc::kValidationError, "eta has support outside E");
    }
  }
  // alpha* = half the largest backward step keeping mu inside the simplex;
  // mu = (1+alpha*) gamma - alpha* eta, beta = alpha*/(1+alpha*).
  std::optional<Rational> min_ratio;
  for (int z : E) {
    if (eta.p[z] > gamma.p[z]) {
      Rational r = gamma.p[z] / (eta.p[z] - gamma.p[z]);
      if (!min_ratio || r < *min_ratio) min_ratio = r;
    }
  }
  Rational alpha =
      min_ratio ? *min_ratio / Rational(2) : Rational(1);
  Rational one_plus = Rational(1) + alpha;
  Decomposition d;
  d.beta = alpha / one_plus;
  d.mu.p.assign(gamma.p.size(), Rational(0));
  for (std::size_t z = 0; z < gamma.p.size(); ++z) {
    d.mu.p[z] = one_plus * gamma.p[z] - alpha * eta.p[z];
  }
  return d;
}

}  // namespace implkit
