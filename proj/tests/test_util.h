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

#ifndef WTL_TESTS_TEST_UTIL_H_
#define WTL_TESTS_TEST_UTIL_H_

#include <cmath>

#include "wtl/lattice.h"
#include "wtl/linalg.h"
#include "wtl/rng.h"

namespace wtl::testing {

// Random lattice in C^n whose real generator has condition number at most
// about `spread`.
inline Lattice RandomLattice(int n, Rng& rng, double spread = 3.0) {
  const int d = 2 * n;
  auto orthogonal = [&] {
    RMatrix g(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) g(i, j) = rng.Normal();
    Eigen::HouseholderQR<RMatrix> qr(g);
    return RMatrix(qr.householderQ() * RMatrix::Identity(d, d));
  };
  RVector s(d);
  for (int i = 0; i < d; ++i) s(i) = std::pow(spread, rng.Uniform01());
  return Lattice::FromRealGenerator(orthogonal() * s.asDiagonal() * orthogonal());
}

inline IMatrix RandomUnimodular(int d, Rng& rng) {
  IMatrix u = IMatrix::Identity(d, d);
  for (int step = 0; step < 3 * d; ++step) {
    const int i = static_cast<int>(rng.UniformInt(d));
    int j = static_cast<int>(rng.UniformInt(d - 1));
    if (j >= i) ++j;
    const int64_t f = static_cast<int64_t>(rng.UniformInt(5)) - 2;
    u.col(i) += f * u.col(j);
  }
  return u;
}

// Image of Z[i][sqrt 2] under its two embeddings x -> (x, x conjugated in
// sqrt 2), repeated over `slots` slots (row-major layout, two rows per slot
// index). diag(u, 1/u) maps it onto itself for u = 3 + 2 sqrt 2.
inline Lattice QuadraticLattice(int slots) {
  const double r = std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  CMatrix block(2, 4);
  block << 1.0, r, i, i * r,  //
      1.0, -r, i, -i * r;
  const int n = 2 * slots;
  CMatrix g = CMatrix::Zero(n, 2 * n);
  for (int c = 0; c < slots; ++c) {
    for (int row = 0; row < 2; ++row) {
      for (int col = 0; col < 4; ++col) {
        g(row * slots + c, 4 * c + col) = block(row, col);
      }
    }
  }
  return Lattice::FromComplexGenerator(g);
}

inline constexpr double kQuadraticUnit = 5.82842712474619009760;  // 3 + 2 sqrt 2

inline RMatrix ToReal(const IMatrix& m) { return m.cast<double>(); }

}  // namespace wtl::testing

#endif  // WTL_TESTS_TEST_UTIL_H_
