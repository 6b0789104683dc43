// Copyright 2026 The wtlattice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WTL_ENUMERATION_H_
#define WTL_ENUMERATION_H_

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "wtl/linalg.h"

namespace wtl {

// Basis reduced by LLL together with the data needed for enumeration:
//   basis = original * unimodular,  basis = q * r  (r upper triangular).
struct ReducedBasis {
  RMatrix basis;
  IMatrix unimodular;
  RMatrix q;
  RMatrix r;
};

// LLL reduction of the columns of `basis` (delta = 0.99). Columns must be
// linearly independent.
ReducedBasis ReduceBasis(const RMatrix& basis);

// Schnorr-Euchner enumeration of every integer vector z with
// |r z + u|^2 <= radius_sq, where r is upper triangular with nonzero
// diagonal. Siblings are visited in order of increasing distance from the
// projected center, so a level is abandoned as soon as one sibling leaves the
// ball.
//
// `visit(z, dist_sq)` is called for each point and returns the squared
// radius to continue with, which lets closest-point search shrink the ball.
// Returns false if `max_points` leaves were visited before completion.
template <typename Visitor>
bool EnumerateBall(const RMatrix& r, const RVector& u, double radius_sq,
                   Visitor&& visit, int64_t max_points = -1) {
  const int d = static_cast<int>(r.rows());
  IVector z = IVector::Zero(d);
  if (d == 0) {
    visit(z, 0.0);
    return true;
  }
  std::vector<double> center(d), partial(d + 1, 0.0), diag_sq(d);
  std::vector<int64_t> dx(d), ddx(d);
  for (int k = 0; k < d; ++k) diag_sq[k] = r(k, k) * r(k, k);

  auto set_level = [&](int k) {
    double s = u(k);
    for (int j = k + 1; j < d; ++j) s += r(k, j) * static_cast<double>(z(j));
    center[k] = -s / r(k, k);
    z(k) = std::llround(center[k]);
    dx[k] = ddx[k] = (center[k] >= static_cast<double>(z(k))) ? 1 : -1;
  };
  auto advance = [&](int k) {
    z(k) += dx[k];
    ddx[k] = -ddx[k];
    dx[k] = ddx[k] - dx[k];
  };

  int64_t leaves = 0;
  int k = d - 1;
  set_level(k);
  while (true) {
    const double diff = static_cast<double>(z(k)) - center[k];
    const double dist = partial[k + 1] + diag_sq[k] * diff * diff;
    if (dist <= radius_sq) {
      if (k == 0) {
        radius_sq = visit(static_cast<const IVector&>(z), dist);
        if (max_points >= 0 && ++leaves >= max_points) return false;
        advance(0);
      } else {
        partial[k] = dist;
        --k;
        set_level(k);
      }
    } else {
      ++k;
      if (k == d) break;
      advance(k);
    }
  }
  return true;
}

}  // namespace wtl

#endif  // WTL_ENUMERATION_H_
