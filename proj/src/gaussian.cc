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

#include "wtl/gaussian.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "wtl/enumeration.h"
#include "wtl/errors.h"

namespace wtl {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Banaszczyk: for c > 1/sqrt(2 pi), rho(L \ c sqrt(d) B) <= C(c)^d rho(L) with
// C(c) = c sqrt(2 pi e) exp(-pi c^2).
double BanaszczykC(double c) {
  return c * std::sqrt(2.0 * kPi * std::exp(1.0)) * std::exp(-kPi * c * c);
}

// Smallest c with C(c) <= y, for 0 < y < 1.
double BanaszczykRadiusFactor(double y) {
  double lo = 1.0 / std::sqrt(2.0 * kPi);
  double hi = lo + 1.0;
  while (BanaszczykC(hi) > y) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (BanaszczykC(mid) > y ? lo : hi) = mid;
  }
  return hi;
}

double LogBallVolume(int d) {
  return 0.5 * d * std::log(kPi) - std::lgamma(0.5 * d + 1.0);
}

double LogAbsDetUpper(const RMatrix& r) {
  double s = 0.0;
  for (Eigen::Index k = 0; k < r.rows(); ++k) s += std::log(std::abs(r(k, k)));
  return s;
}

// Heuristic number of lattice points in a ball, from the volume ratio.
double EstimateCount(int d, double log_det, double radius_sq) {
  return std::exp(LogBallVolume(d) + 0.5 * d * std::log(radius_sq) - log_det);
}

// Radius^2 for which the heuristic count equals `count`.
double RadiusSqForCount(int d, double log_det, double count) {
  return std::exp(2.0 * (std::log(count) + log_det - LogBallVolume(d)) / d);
}

RMatrix DualBasisFor(const Lattice& lattice, const CovarianceSpec& spread) {
  const RMatrix dual = lattice.real_generator().inverse().transpose();
  return std::sqrt(kPi) * (spread.cholesky().transpose() * dual);
}

RMatrix PrimalBasisFor(const Lattice& lattice, const CovarianceSpec& spread) {
  return spread.cholesky()
             .triangularView<Eigen::Lower>()
             .solve(lattice.real_generator()) /
         std::sqrt(kPi);
}

void CheckDims(const Lattice& lattice, const CovarianceSpec& spread) {
  if (lattice.complex_dim() != spread.complex_dim()) {
    Fail(ErrorCode::kShapeError, "covariance dimension does not match lattice");
  }
}

// Evaluates sum_lambda exp(-pi |M z - x|^2) for whitened basis M.
class ShiftedGaussianSum {
 public:
  ShiftedGaussianSum(const RMatrix& basis, double tol)
      : red_(ReduceBasis(basis)) {
    const int d = static_cast<int>(basis.cols());
    const double rho = 1.0 + GaussianLatticeSum(basis, tol).nonzero_sum;
    const double y = std::pow(std::min(0.5, tol / rho), 1.0 / d);
    const double c = BanaszczykRadiusFactor(y);
    radius_sq_ = c * c * d;
  }

  double Eval(const RVector& x) const {
    const RVector u = -(red_.q.transpose() * x);
    double sum = 0.0;
    EnumerateBall(red_.r, u, radius_sq_, [&](const IVector&, double dist) {
      sum += std::exp(-kPi * dist);
      return radius_sq_;
    });
    return sum;
  }

 private:
  ReducedBasis red_;
  double radius_sq_ = 0.0;
};

}  // namespace

CovarianceSpec::CovarianceSpec(RMatrix real_form, bool spherical)
    : real_form_(std::move(real_form)), spherical_(spherical) {
  Eigen::LLT<RMatrix> llt(real_form_);
  if (llt.info() != Eigen::Success) {
    Fail(ErrorCode::kInvalidArgument, "covariance is not positive definite");
  }
  cholesky_ = llt.matrixL();
  double det = 1.0;
  for (Eigen::Index k = 0; k < cholesky_.rows(); ++k) det *= cholesky_(k, k);
  det_ = det;
  min_eigenvalue_ = MinEigenvalue(real_form_);
  if (!(min_eigenvalue_ > 0.0)) {
    Fail(ErrorCode::kInvalidArgument, "covariance is not positive definite");
  }
}

CovarianceSpec CovarianceSpec::Spherical(int n, double sigma) {
  if (n <= 0 || !(sigma > 0.0) || !std::isfinite(sigma)) {
    Fail(ErrorCode::kInvalidArgument, "spherical covariance needs sigma > 0");
  }
  return CovarianceSpec(sigma * sigma * RMatrix::Identity(2 * n, 2 * n), true);
}

CovarianceSpec CovarianceSpec::FromHermitian(const CMatrix& sigma) {
  if (sigma.rows() == 0 || sigma.rows() != sigma.cols()) {
    Fail(ErrorCode::kShapeError, "covariance must be square");
  }
  const double scale = std::max(1.0, sigma.cwiseAbs().maxCoeff());
  if (!IsHermitian(sigma, kLinearAlgebraTol * scale)) {
    Fail(ErrorCode::kInvalidArgument, "covariance is not Hermitian");
  }
  const CMatrix h = 0.5 * (sigma + sigma.adjoint());
  return CovarianceSpec(EmbedOperator(h), false);
}

CovarianceSpec CovarianceSpec::FromReal(const RMatrix& real_form) {
  if (real_form.rows() == 0 || real_form.rows() % 2 != 0 ||
      real_form.rows() != real_form.cols()) {
    Fail(ErrorCode::kShapeError, "real covariance must be 2n x 2n");
  }
  const double scale = std::max(1.0, real_form.cwiseAbs().maxCoeff());
  if ((real_form - real_form.transpose()).cwiseAbs().maxCoeff() >
      kLinearAlgebraTol * scale) {
    Fail(ErrorCode::kInvalidArgument, "covariance is not symmetric");
  }
  return CovarianceSpec(0.5 * (real_form + real_form.transpose()), false);
}

CovarianceSpec CovarianceSpec::Transformed(const CMatrix& a) const {
  if (a.rows() != complex_dim() || a.cols() != complex_dim()) {
    Fail(ErrorCode::kShapeError, "transform must be n x n");
  }
  const RMatrix e = EmbedOperator(a);
  const RMatrix s = e * real_form_ * e.transpose();
  return CovarianceSpec(0.5 * (s + s.transpose()), false);
}

SeriesResult GaussianLatticeSum(const RMatrix& basis, double tol,
                                int64_t max_points) {
  const int d = static_cast<int>(basis.cols());
  SeriesResult out;
  if (d == 0) return out;
  if (!(tol > 0.0)) Fail(ErrorCode::kInvalidArgument, "tolerance must be > 0");
  const ReducedBasis red = ReduceBasis(basis);
  const double log_det = LogAbsDetUpper(red.r);
  const RVector zero = RVector::Zero(d);

  double rho_lower = 1.0;
  for (int pass = 0; pass < 16; ++pass) {
    const double target = 0.5 * tol / (tol + rho_lower);
    double c = BanaszczykRadiusFactor(std::pow(target, 1.0 / d));
    double radius_sq = c * c * d;
    bool capped = false;
    if (EstimateCount(d, log_det, radius_sq) > static_cast<double>(max_points)) {
      radius_sq = RadiusSqForCount(d, log_det, 0.5 * max_points);
      c = std::sqrt(radius_sq / d);
      capped = true;
    }
    double sum = 0.0;
    int64_t points = 0;
    const bool complete = EnumerateBall(
        red.r, zero, radius_sq,
        [&](const IVector&, double dist) {
          if (dist > 0.0) sum += std::exp(-kPi * dist);
          ++points;
          return radius_sq;
        },
        max_points);
    const double rho = 1.0 + sum;
    double tail = std::numeric_limits<double>::infinity();
    const double cd = std::pow(BanaszczykC(c), d);
    if (complete && c > 1.0 / std::sqrt(2.0 * kPi) && cd < 1.0) {
      tail = rho * cd / (1.0 - cd);
    }
    out.nonzero_sum = sum;
    out.tail_bound = tail;
    out.points = points;
    if (capped || !complete) {
      char buf[128];
      std::snprintf(buf, sizeof(buf),
                    "Gaussian lattice sum needs more than %lld points for "
                    "tolerance %g",
                    static_cast<long long>(max_points), tol);
      throw TruncationError(buf, sum, tail);
    }
    if (tail <= tol) return out;
    rho_lower = rho;
  }
  throw TruncationError("Gaussian lattice sum did not converge", out.nonzero_sum,
                        out.tail_bound);
}

SeriesResult ThetaSeries(const Lattice& lattice, double tau, double tol) {
  if (!(tau > 0.0)) Fail(ErrorCode::kInvalidArgument, "tau must be > 0");
  return GaussianLatticeSum(std::sqrt(tau) * lattice.real_generator(), tol);
}

FlatnessResult FlatnessFactor(const Lattice& lattice,
                              const CovarianceSpec& spread, double tol,
                              FlatnessRoute route) {
  CheckDims(lattice, spread);
  const int d = lattice.real_dim();
  const RMatrix dual_basis = DualBasisFor(lattice, spread);
  const RMatrix primal_basis = PrimalBasisFor(lattice, spread);
  if (route == FlatnessRoute::kAuto) {
    // Compare heuristic counts in the ball of radius sqrt(d).
    const double dual_count = EstimateCount(
        d, std::log(std::abs(dual_basis.determinant())), d);
    const double primal_count = EstimateCount(
        d, std::log(std::abs(primal_basis.determinant())), d);
    route = (dual_count <= 1e5 || dual_count <= primal_count)
                ? FlatnessRoute::kDual
                : FlatnessRoute::kPrimal;
  }
  FlatnessResult out;
  out.route = route;
  if (route == FlatnessRoute::kDual) {
    const SeriesResult s = GaussianLatticeSum(dual_basis, tol);
    out.epsilon = s.nonzero_sum;
    out.tail_bound = s.tail_bound;
    out.points = s.points;
    return out;
  }
  // V f(0) - 1 with f(0) = sum_lambda exp(-lambda^T S^{-1} lambda) /
  // (pi^n |Sigma|).
  const double log_k = std::log(lattice.volume()) -
                       lattice.complex_dim() * std::log(kPi) -
                       std::log(spread.det());
  const double k = std::exp(log_k);
  const SeriesResult s = GaussianLatticeSum(primal_basis, tol / k);
  out.epsilon = std::max(0.0, k * (1.0 + s.nonzero_sum) - 1.0);
  out.tail_bound = k * s.tail_bound;
  out.points = s.points;
  return out;
}

FlatnessResult FlatnessFactor(const Lattice& lattice, double sigma, double tol,
                              FlatnessRoute route) {
  return FlatnessFactor(
      lattice, CovarianceSpec::Spherical(lattice.complex_dim(), sigma), tol,
      route);
}

double SmoothingParameter(const Lattice& lattice, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "epsilon must lie in (0, 1)");
  }
  const RMatrix dual = lattice.real_generator().inverse().transpose();
  auto dual_sum = [&](double sigma) {
    return GaussianLatticeSum(std::sqrt(kPi) * sigma * dual, 1e-12 * epsilon)
        .nonzero_sum;
  };
  double hi = std::pow(lattice.volume(), 1.0 / lattice.real_dim());
  while (dual_sum(hi) > epsilon) hi *= 2.0;
  double lo = 0.5 * hi;
  while (dual_sum(lo) <= epsilon) {
    hi = lo;
    lo *= 0.5;
  }
  while (hi - lo > 1e-11 * hi) {
    const double mid = 0.5 * (lo + hi);
    (dual_sum(mid) > epsilon ? lo : hi) = mid;
  }
  return std::sqrt(2.0 * kPi) * 0.5 * (lo + hi);
}

double Vnr(const Lattice& lattice, const CovarianceSpec& spread) {
  CheckDims(lattice, spread);
  return std::exp((std::log(lattice.volume()) - std::log(spread.det())) /
                  lattice.complex_dim());
}

double Vnr(const Lattice& lattice, double sigma) {
  return Vnr(lattice, CovarianceSpec::Spherical(lattice.complex_dim(), sigma));
}

double PeriodicGaussian(const Lattice& lattice, const CovarianceSpec& spread,
                        const CVector& x, double tol) {
  CheckDims(lattice, spread);
  if (x.size() != lattice.complex_dim()) {
    Fail(ErrorCode::kShapeError, "point dimension does not match lattice");
  }
  const ShiftedGaussianSum sum(PrimalBasisFor(lattice, spread), tol);
  const RVector xw = spread.cholesky().triangularView<Eigen::Lower>().solve(
                         EmbedVector(x)) /
                     std::sqrt(kPi);
  return sum.Eval(xw) /
         (std::pow(kPi, lattice.complex_dim()) * spread.det());
}

PrimalFlatnessResult PrimalFlatnessGrid(const Lattice& lattice,
                                        const CovarianceSpec& spread,
                                        int64_t max_points) {
  CheckDims(lattice, spread);
  const int d = lattice.real_dim();
  const int g = std::max(
      2, std::min(65, static_cast<int>(std::floor(
                          std::pow(static_cast<double>(max_points), 1.0 / d) +
                          1e-9))));
  const RMatrix basis = PrimalBasisFor(lattice, spread);
  const ShiftedGaussianSum sum(basis, 1e-10);
  const double k = lattice.volume() /
                   (std::pow(kPi, lattice.complex_dim()) * spread.det());

  PrimalFlatnessResult out;
  out.points_per_dim = g;
  auto visit = [&](const RVector& coeffs) {
    const double v = k * sum.Eval(basis * coeffs);
    out.epsilon = std::max(out.epsilon, std::abs(v - 1.0));
    ++out.grid_points;
  };
  std::vector<int> idx(d, 0);
  RVector coeffs(d);
  while (true) {
    for (int i = 0; i < d; ++i) coeffs(i) = static_cast<double>(idx[i]) / g;
    visit(coeffs);
    int i = 0;
    while (i < d && ++idx[i] == g) idx[i++] = 0;
    if (i == d) break;
  }
  // Every corner of the parallelepiped is a lattice point; probe around one.
  const double h = 0.25 / g;
  for (int i = 0; i < d; ++i) {
    for (double s : {-h, h}) {
      coeffs.setZero();
      coeffs(i) = s;
      visit(coeffs);
    }
  }
  return out;
}

}  // namespace wtl
