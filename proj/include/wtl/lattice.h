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

#ifndef WTL_LATTICE_H_
#define WTL_LATTICE_H_

#include <optional>

#include "wtl/enumeration.h"
#include "wtl/linalg.h"

namespace wtl {

// Exact closest-point search is limited to this real dimension.
inline constexpr int kMaxEnumerationDim = 32;

// Real 2n x 2n generator [Re(B_c); Im(B_c)] of a complex n x 2n generator.
// Throws kShapeError for a non n x 2n input and kRankDeficient when the
// stacked matrix is singular.
RMatrix RealEmbedding(const CMatrix& complex_generator);

// A full-rank lattice in C^n given by n x 2n complex generator B_c; the
// lattice is {B_c z : z in Z^{2n}}. Immutable after construction.
class Lattice {
 public:
  static Lattice FromComplexGenerator(const CMatrix& complex_generator);
  static Lattice FromRealGenerator(const RMatrix& real_generator);
  // Z[i]^n scaled by `scale`.
  static Lattice GaussianIntegers(int n, double scale = 1.0);

  int complex_dim() const { return static_cast<int>(complex_generator_.rows()); }
  int real_dim() const { return 2 * complex_dim(); }
  const CMatrix& complex_generator() const { return complex_generator_; }
  const RMatrix& real_generator() const { return real_generator_; }
  double volume() const { return volume_; }
  const ReducedBasis& reduced() const { return reduced_; }

  Lattice Dual() const;
  // The lattice A * this for an invertible complex n x n matrix A.
  Lattice Transformed(const CMatrix& a) const;
  Lattice Scaled(double c) const;

  // Real coordinates of y with respect to the real generator.
  RVector Coefficients(const CVector& y) const;
  // Integer coordinates of a lattice point; kInvalidArgument if y is not in
  // the lattice within `tol`.
  IVector IntegerCoefficients(const CVector& y,
                              double tol = kMembershipTol) const;
  bool Contains(const CVector& y, double tol = kMembershipTol) const;
  CVector Point(const IVector& coeffs) const;

 private:
  Lattice(CMatrix complex_generator, RMatrix real_generator);

  CMatrix complex_generator_;
  RMatrix real_generator_;
  RMatrix real_generator_inverse_;
  double volume_ = 0.0;
  ReducedBasis reduced_;
};

struct LatticePoint {
  CVector coords;
  // Coordinates with respect to the lattice generator: coords = B_c * coeffs.
  IVector coeffs;
};

// Representative of y + Lambda in the half-open fundamental parallelepiped of
// the generator (coefficients in [0, 1)). Coefficients within kMembershipTol
// of an integer are snapped, so lattice points map to exactly zero.
CVector ModLattice(const CVector& y, const Lattice& lattice);

// Exact closest lattice point to y by Schnorr-Euchner enumeration on the
// LLL-reduced basis. Ties (within 1e-9 relative distance) are broken toward
// the lexicographically smallest coefficient vector. Throws
// kDimensionTooLarge above kMaxEnumerationDim.
LatticePoint ClosestPoint(const CVector& y, const Lattice& lattice);

// Row-major reshaping of an nT-vector into an n x T matrix: row r holds
// entries rT .. rT + T - 1.
CMatrix MatrixForm(const CVector& x, int n, int t);
CVector Vectorize(const CMatrix& x);

}  // namespace wtl

#endif  // WTL_LATTICE_H_
