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

#include "wtl/lattice.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wtl/errors.h"

namespace wtl {
namespace {

constexpr double kLllDelta = 0.99;
constexpr int kMaxLllSwaps = 1000000;

void GramSchmidt(const RMatrix& b, RMatrix& mu, RVector& norms_sq) {
  const int d = static_cast<int>(b.cols());
  RMatrix bstar(b.rows(), d);
  for (int i = 0; i < d; ++i) {
    RVector v = b.col(i);
    for (int j = 0; j < i; ++j) {
      mu(i, j) = b.col(i).dot(bstar.col(j)) / norms_sq(j);
      v -= mu(i, j) * bstar.col(j);
    }
    bstar.col(i) = v;
    norms_sq(i) = v.squaredNorm();
  }
}

bool LexLess(const IVector& a, const IVector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                      b.data() + b.size());
}

}  // namespace

ReducedBasis ReduceBasis(const RMatrix& basis) {
  const int d = static_cast<int>(basis.cols());
  RMatrix b = basis;
  IMatrix u = IMatrix::Identity(d, d);
  RMatrix mu = RMatrix::Zero(d, d);
  RVector norms_sq(d);
  if (d > 0) GramSchmidt(b, mu, norms_sq);
  int k = 1;
  int swaps = 0;
  while (k < d && swaps < kMaxLllSwaps) {
    bool changed = false;
    for (int j = k - 1; j >= 0; --j) {
      const double q = std::round(mu(k, j));
      if (q == 0.0) continue;
      changed = true;
      b.col(k) -= q * b.col(j);
      u.col(k) -= static_cast<int64_t>(q) * u.col(j);
      for (int i = 0; i < j; ++i) mu(k, i) -= q * mu(j, i);
      mu(k, j) -= q;
    }
    if (changed) GramSchmidt(b, mu, norms_sq);
    if (norms_sq(k) >= (kLllDelta - mu(k, k - 1) * mu(k, k - 1)) *
                           norms_sq(k - 1)) {
      ++k;
    } else {
      b.col(k).swap(b.col(k - 1));
      u.col(k).swap(u.col(k - 1));
      GramSchmidt(b, mu, norms_sq);
      k = std::max(k - 1, 1);
      ++swaps;
    }
  }
  ReducedBasis out;
  out.unimodular = u;
  out.basis = basis * u.cast<double>();
  Eigen::HouseholderQR<RMatrix> qr(out.basis);
  out.q = qr.householderQ() * RMatrix::Identity(d, d);
  out.r = qr.matrixQR().triangularView<Eigen::Upper>();
  return out;
}

RMatrix RealEmbedding(const CMatrix& complex_generator) {
  const auto n = complex_generator.rows();
  if (n == 0 || complex_generator.cols() != 2 * n) {
    Fail(ErrorCode::kShapeError,
         "generator must be n x 2n, got " + std::to_string(n) + " x " +
             std::to_string(complex_generator.cols()));
  }
  RMatrix real(2 * n, 2 * n);
  real.topRows(n) = complex_generator.real();
  real.bottomRows(n) = complex_generator.imag();
  Eigen::JacobiSVD<RMatrix> svd(real);
  const RVector& s = svd.singularValues();
  if (!(s(s.size() - 1) > kLinearAlgebraTol * s(0))) {
    Fail(ErrorCode::kRankDeficient, "stacked real generator is singular");
  }
  return real;
}

Lattice::Lattice(CMatrix complex_generator, RMatrix real_generator)
    : complex_generator_(std::move(complex_generator)),
      real_generator_(std::move(real_generator)) {
  real_generator_inverse_ = real_generator_.inverse();
  volume_ = std::abs(real_generator_.determinant());
  reduced_ = ReduceBasis(real_generator_);
}

Lattice Lattice::FromComplexGenerator(const CMatrix& complex_generator) {
  RMatrix real = RealEmbedding(complex_generator);
  return Lattice(complex_generator, std::move(real));
}

Lattice Lattice::FromRealGenerator(const RMatrix& real_generator) {
  const auto m = real_generator.rows();
  if (m == 0 || m % 2 != 0 || real_generator.cols() != m) {
    Fail(ErrorCode::kShapeError, "real generator must be 2n x 2n");
  }
  const auto n = m / 2;
  CMatrix complex(n, m);
  complex.real() = real_generator.topRows(n);
  complex.imag() = real_generator.bottomRows(n);
  return FromComplexGenerator(complex);
}

Lattice Lattice::GaussianIntegers(int n, double scale) {
  return FromRealGenerator(scale * RMatrix::Identity(2 * n, 2 * n));
}

Lattice Lattice::Dual() const {
  return FromRealGenerator(real_generator_inverse_.transpose());
}

Lattice Lattice::Transformed(const CMatrix& a) const {
  if (a.rows() != complex_dim() || a.cols() != complex_dim()) {
    Fail(ErrorCode::kShapeError, "transform must be n x n");
  }
  return FromComplexGenerator(a * complex_generator_);
}

Lattice Lattice::Scaled(double c) const {
  return FromComplexGenerator(c * complex_generator_);
}

RVector Lattice::Coefficients(const CVector& y) const {
  if (y.size() != complex_dim()) {
    Fail(ErrorCode::kShapeError, "vector length does not match lattice");
  }
  return real_generator_inverse_ * EmbedVector(y);
}

IVector Lattice::IntegerCoefficients(const CVector& y, double tol) const {
  const RVector w = Coefficients(y);
  IVector z(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    const double r = std::round(w(i));
    if (std::abs(w(i) - r) > tol) {
      Fail(ErrorCode::kInvalidArgument, "vector is not a lattice point");
    }
    z(i) = static_cast<int64_t>(r);
  }
  return z;
}

bool Lattice::Contains(const CVector& y, double tol) const {
  const RVector w = Coefficients(y);
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (std::abs(w(i) - std::round(w(i))) > tol) return false;
  }
  return true;
}

CVector Lattice::Point(const IVector& coeffs) const {
  if (coeffs.size() != real_dim()) {
    Fail(ErrorCode::kShapeError, "coefficient vector must have length 2n");
  }
  return complex_generator_ * coeffs.cast<double>().cast<Complex>();
}

CVector ModLattice(const CVector& y, const Lattice& lattice) {
  RVector w = lattice.Coefficients(y);
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    const double r = std::round(w(i));
    w(i) = std::abs(w(i) - r) <= kMembershipTol ? 0.0 : w(i) - std::floor(w(i));
  }
  return ComplexifyVector(lattice.real_generator() * w);
}

LatticePoint ClosestPoint(const CVector& y, const Lattice& lattice) {
  if (lattice.real_dim() > kMaxEnumerationDim) {
    Fail(ErrorCode::kDimensionTooLarge,
         "closest point search limited to real dimension " +
             std::to_string(kMaxEnumerationDim));
  }
  if (y.size() != lattice.complex_dim()) {
    Fail(ErrorCode::kShapeError, "vector length does not match lattice");
  }
  const ReducedBasis& red = lattice.reduced();
  const RVector u = -(red.q.transpose() * EmbedVector(y));
  const IMatrix& unimodular = red.unimodular;

  double best = std::numeric_limits<double>::infinity();
  IVector best_coeffs;
  auto slack = [](double d) { return 1e-9 * std::max(1.0, d); };
  EnumerateBall(red.r, u, std::numeric_limits<double>::infinity(),
                [&](const IVector& z, double dist) {
                  IVector coeffs = unimodular * z;
                  if (best_coeffs.size() == 0 || dist < best - slack(best)) {
                    best = dist;
                    best_coeffs = std::move(coeffs);
                  } else if (dist <= best + slack(best) &&
                             LexLess(coeffs, best_coeffs)) {
                    best = std::min(best, dist);
                    best_coeffs = std::move(coeffs);
                  }
                  return best + slack(best);
                });
  LatticePoint out;
  out.coords = lattice.Point(best_coeffs);
  out.coeffs = std::move(best_coeffs);
  return out;
}

CMatrix MatrixForm(const CVector& x, int n, int t) {
  if (n <= 0 || t <= 0 || x.size() != static_cast<Eigen::Index>(n) * t) {
    Fail(ErrorCode::kShapeError, "vector length " + std::to_string(x.size()) +
                                     " is not " + std::to_string(n) + " x " +
                                     std::to_string(t));
  }
  CMatrix out(n, t);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < t; ++c) out(r, c) = x(r * t + c);
  }
  return out;
}

CVector Vectorize(const CMatrix& x) {
  CVector out(x.size());
  for (Eigen::Index r = 0; r < x.rows(); ++r) {
    for (Eigen::Index c = 0; c < x.cols(); ++c) out(r * x.cols() + c) = x(r, c);
  }
  return out;
}

}  // namespace wtl
