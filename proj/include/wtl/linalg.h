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

#ifndef WTL_LINALG_H_
#define WTL_LINALG_H_

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace wtl {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using IVector = Eigen::Matrix<int64_t, Eigen::Dynamic, 1>;
using IMatrix = Eigen::Matrix<int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// Tolerance for lattice membership (distance of coefficients to integers).
inline constexpr double kMembershipTol = 1e-9;
// Tolerance for linear-algebra identities (symmetry, reconstruction).
inline constexpr double kLinearAlgebraTol = 1e-12;

class Rng;

// x in C^n  ->  [Re x; Im x] in R^{2n}. Under this map Re<x, y> is the real
// dot product and |x|^2 is preserved.
RVector EmbedVector(const CVector& x);
CVector ComplexifyVector(const RVector& x);

// Real 2n x 2n matrix M with Embed(A x) = M Embed(x).
RMatrix EmbedOperator(const CMatrix& a);

CMatrix Kron(const CMatrix& a, const CMatrix& b);

// Operator acting on the row-major vectorization of an n x T matrix X as
// X -> H X, i.e. H applied independently in every time slot. With row-major
// vectorization this is kron(H, I_T).
CMatrix PerSlotOperator(const CMatrix& h, int slots);

bool IsHermitian(const CMatrix& a, double tol = kLinearAlgebraTol);

// Smallest eigenvalue of a real symmetric matrix.
double MinEigenvalue(const RMatrix& symmetric);

// Largest singular value.
double SpectralNorm(const CMatrix& a);

// Ratio of extreme singular values; +inf for singular input.
double ConditionNumber(const CMatrix& a);

// Haar-distributed n x n unitary (QR of a complex Ginibre matrix with the
// phase correction of Mezzadri).
CMatrix HaarUnitary(int n, Rng& rng);

// Matrix with i.i.d. circularly-symmetric complex Gaussian entries of the
// given variance per complex entry.
CMatrix ComplexGaussianMatrix(int rows, int cols, double variance, Rng& rng);

}  // namespace wtl

#endif  // WTL_LINALG_H_
