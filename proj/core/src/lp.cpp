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

#include "implkit/lp.hpp"

#include "implkit/error.hpp"

namespace implkit {

// Feasibility of { lambda >= 0, sum lambda = 1, A lambda >= 0 } in standard
// form: A lambda - s = 0 with slacks s >= 0, plus the convexity row, one
// artificial per row, minimize the artificial sum.
bool lp_feasible(const std::vector<std::vector<Rational>>& A, int n) {
  if (n <= 0) return false;
  const int m = static_cast<int>(A.size());
  if (m == 0) return true;

  const int rows = m + 1;
  const int n_struct = n + m;          // lambda then slacks
  const int n_total = n_struct + rows;  // plus artificials
  const int rhs = n_total;

  std::vector<std::vector<Rational>> t(
      rows, std::vector<Rational>(n_total + 1, Rational(0)));
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < n; ++j) t[r][j] = A[r][j];
    t[r][n + r] = Rational(-1);
  }
  for (int j = 0; j < n; ++j) t[m][j] = Rational(1);
  t[m][rhs] = Rational(1);

  // Rows with negative entries under an all-nonnegative rhs are fine; the
  // artificial basis just needs rhs >= 0, which holds (0,...,0,1).
  std::vector<int> basis(rows);
  for (int r = 0; r < rows; ++r) {
    t[r][n_struct + r] = Rational(1);
    basis[r] = n_struct + r;
  }

  // Reduced-cost row for min(sum of artificials): c_j minus the column sum
  // over rows (every basic artificial has cost one).
  std::vector<Rational> obj(n_total + 1, Rational(0));
  for (int j = 0; j <= n_total; ++j) {
    Rational colsum;
    for (int r = 0; r < rows; ++r) colsum += t[r][j];
    Rational cost = (j >= n_struct && j < n_total) ? Rational(1) : Rational(0);
    obj[j] = cost - colsum;
  }
  // obj[rhs] = -(current objective value).

  while (true) {
    int enter = -1;
    for (int j = 0; j < n_total; ++j) {
      if (obj[j].sign() < 0) {
        enter = j;
        break;  // Bland: lowest eligible index
      }
    }
    if (enter < 0) break;
    int leave = -1;
    Rational best_ratio;
    for (int r = 0; r < rows; ++r) {
      if (t[r][enter].sign() <= 0) continue;
      Rational ratio = t[r][rhs] / t[r][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave < 0) {
      throw Error(Errc::kInternalMismatch,
                  "phase-1 simplex column unbounded");
    }
    Rational pivot = t[leave][enter];
    for (int j = 0; j <= n_total; ++j) t[leave][j] /= pivot;
    for (int r = 0; r < rows; ++r) {
      if (r == leave || t[r][enter].is_zero()) continue;
      Rational factor = t[r][enter];
      for (int j = 0; j <= n_total; ++j) {
        t[r][j] -= factor * t[leave][j];
      }
    }
    if (!obj[enter].is_zero()) {
      Rational factor = obj[enter];
      for (int j = 0; j <= n_total; ++j) {
        obj[j] -= factor * t[leave][j];
      }
    }
    basis[leave] = enter;
  }
  return obj[rhs].is_zero();
}

}  // namespace implkit
