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

#include "wtl/linalg.h"

#include <cmath>
#include <limits>

#include "wtl/rng.h"

namespace wtl {

RVector EmbedVector(const CVector& x) {
  const Eigen::Index n = x.size();
  RVector out(2 * n);
  out.head(n) = x.real();
  out.tail(n) = x.imag();
  return out;
}

CVector ComplexifyVector(const RVector& x) {
  const Eigen::Index n = x.size() / 2;
  CVector out(n);
  for (Eigen::Index i = 0; i < n; ++i) out(i) = Complex(x(i), x(n + i));
  return out;
}

RMatrix EmbedOperator(const CMatrix& a) {
  const Eigen::Index r = a.rows();
  const Eigen::Index c = a.cols();
  RMatrix out(2 * r, 2 * c);
  out.topLeftCorner(r, c) = a.real();
  out.topRightCorner(r, c) = -a.imag();
  out.bottomLeftCorner(r, c) = a.imag();
  out.bottomRightCorner(r, c) = a.real();
  return out;
}

CMatrix Kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMatrix PerSlotOperator(const CMatrix& h, int slots) {
  return Kron(h, CMatrix::Identity(slots, slots));
}

bool IsHermitian(const CMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

double MinEigenvalue(const RMatrix& symmetric) {
  Eigen::SelfAdjointEigenSolver<RMatrix> solver(symmetric,
                                                Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double SpectralNorm(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues()(0);
}

double ConditionNumber(const CMatrix& a) {
  Eigen::JacobiSVD<CMatrix> svd(a);
  const RVector s = svd.singularValues();
  if (s.size() == 0) return std::numeric_limits<double>::infinity();
  const double smallest = s(s.size() - 1);
  if (smallest <= 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / smallest;
}

CMatrix ComplexGaussianMatrix(int rows, int cols, double variance, Rng& rng) {
  const double scale = std::sqrt(variance / 2.0);
  CMatrix out(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = rng.Normal();
      const double im = rng.Normal();
      out(i, j) = Complex(scale * re, scale * im);
    }
  }
  return out;
}

CMatrix HaarUnitary(int n, Rng& rng) {
  const CMatrix g = ComplexGaussianMatrix(n, n, 1.0, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    const Complex phase = mag > 0.0 ? r(j, j) / mag : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

}  // namespace wtl
