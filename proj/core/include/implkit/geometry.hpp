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

#ifndef IMPLKIT_GEOMETRY_HPP_
#define IMPLKIT_GEOMETRY_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "implkit/environment.hpp"

namespace implkit {

// One linear inequality coeff . y <= bound over lotteries.
struct HalfspaceCut {
  std::vector<Rational> coeff;  // indexed by outcome
  Rational bound;
};

// The uniform shape of every weak lower-contour set over lotteries in this
// library: a sub-simplex over `ground`, optionally intersected with a single
// half-space.  `n_outcomes` is the size of the ambient outcome list, so that
// vertices come out as dense lotteries.
struct ContourPolytope {
  int n_outcomes = 0;
  std::vector<int> ground;  // sorted outcome indices, nonempty
  std::optional<HalfspaceCut> cut;

  // Exact membership: support inside `ground` and the cut satisfied.
  bool contains(const Lottery& y) const;
};

struct VertexSet {
  std::vector<Lottery> v;
};

struct ContainmentResult {
  bool contained = true;
  std::optional<Lottery> witness;  // a violating vertex when !contained
};

// {z in Z : u_i^theta(a) >= u_i^theta(z)}; always contains a.
std::vector<int> lower_contour_Z(const Environment& env, int i, int theta,
                                 int a);

// {z in Z : u_i^theta(a) > u_i^theta(z)}; never contains a.
std::vector<int> strict_lower_contour_Z(const Environment& env, int i,
                                        int theta, int a);

// Intersection over a nonempty set E of lower_contour_Z(., z).
std::vector<int> lower_contour_Z_of_set(const Environment& env, int i,
                                        int theta, const std::vector<int>& E);

// Simplex over `ground` cut by u_i^theta . y <= U_i^theta(alpha).
ContourPolytope lower_contour_Y(const Environment& env, int i, int theta,
                                const Lottery& alpha,
                                const std::vector<int>& ground);

// Exact vertex enumeration.  Unit vertices (in declared outcome order) come
// first, then cut/edge intersection points ordered lexicographically by the
// (feasible, infeasible) endpoint pair.  Throws EmptyPolytope when no unit
// vertex is feasible.
VertexSet vertices(const ContourPolytope& P);

// True iff c . v <= b for every vertex v of P; valid because P is convex and
// the target is a half-space.  On failure the first violating vertex is the
// witness.
ContainmentResult contains_in_halfspace(const ContourPolytope& P,
                                        const std::vector<Rational>& c,
                                        const Rational& b);

// Maximum of a linear objective over P, with the first maximizing vertex in
// enumeration order.
std::pair<Rational, Lottery> argmax_linear(const ContourPolytope& P,
                                           const std::vector<Rational>& c);

struct Decomposition {
  Rational beta;  // strictly inside (0,1)
  Lottery mu;
};

// Writes a full-support gamma on E as beta*eta + (1-beta)*mu with mu in the
// simplex over E.  gamma must have support exactly E, eta support within E.
Decomposition decompose_interior(const Lottery& gamma, const Lottery& eta,
                                 const std::vector<int>& E);

}  // namespace implkit

#endif  // IMPLKIT_GEOMETRY_HPP_
