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

#ifndef WTL_GAUSSIAN_H_
#define WTL_GAUSSIAN_H_

#include <cstdint>

#include "wtl/lattice.h"
#include "wtl/linalg.h"

namespace wtl {

// Covariance of a circularly-symmetric complex Gaussian on C^n, stored in the
// real 2n x 2n form S with x^H Sigma^{-1} x = Embed(x)^T S^{-1} Embed(x). For
// a Hermitian Sigma = A + iB this is [[A, -B], [B, A]]; the complex
// determinant is sqrt(det S). The density is
//   f(x) = exp(-Embed(x)^T S^{-1} Embed(x)) / (pi^n |Sigma|).
class CovarianceSpec {
 public:
  // sigma^2 I.
  static CovarianceSpec Spherical(int n, double sigma);
  // Throws kInvalidArgument unless Hermitian within 1e-12 (relative) and
  // positive definite.
  static CovarianceSpec FromHermitian(const CMatrix& sigma);
  // Arbitrary symmetric positive-definite real form; needed for Gaussians on
  // real lattices that are not circularly symmetric.
  static CovarianceSpec FromReal(const RMatrix& real_form);

  int complex_dim() const { return static_cast<int>(real_form_.rows() / 2); }
  const RMatrix& real_form() const { return real_form_; }
  // Lower Cholesky factor L with real_form = L L^T.
  const RMatrix& cholesky() const { return cholesky_; }
  double det() const { return det_; }
  double min_eigenvalue() const { return min_eigenvalue_; }
  bool is_spherical() const { return spherical_; }
  // A Sigma A^H for complex n x n A.
  CovarianceSpec Transformed(const CMatrix& a) const;

 private:
  explicit CovarianceSpec(RMatrix real_form, bool spherical);

  RMatrix real_form_;
  RMatrix cholesky_;
  double det_ = 1.0;
  double min_eigenvalue_ = 1.0;
  bool spherical_ = false;
};

struct SeriesResult {
  // Sum over the nonzero points only; the zero point contributes exactly 1.
  double nonzero_sum = 0.0;
  double tail_bound = 0.0;
  int64_t points = 0;
};

inline constexpr double kDefaultSeriesTol = 1e-12;
inline constexpr int64_t kMaxSeriesPoints = 20000000;

// sum_{z != 0} exp(-pi |B z|^2) for the lattice with column basis B. The
// enumeration ball is chosen from Banaszczyk's bound so that the neglected
// mass is at most `tol`; if that ball holds more than `max_points` points a
// TruncationError carries the partial sum and its certified tail bound.
SeriesResult GaussianLatticeSum(const RMatrix& basis,
                                double tol = kDefaultSeriesTol,
                                int64_t max_points = kMaxSeriesPoints);

// Theta_Lambda(tau) = sum_lambda exp(-pi tau |lambda|^2); value() = 1 +
// nonzero_sum.
SeriesResult ThetaSeries(const Lattice& lattice, double tau,
                         double tol = kDefaultSeriesTol);

enum class FlatnessRoute { kAuto, kDual, kPrimal };

struct FlatnessResult {
  double epsilon = 0.0;
  double tail_bound = 0.0;
  int64_t points = 0;
  FlatnessRoute route = FlatnessRoute::kDual;
};

// eps_Lambda(sqrt(Sigma)) = sum_{l in Lambda* \ 0} exp(-pi^2 l^T S l). When
// the dual series needs too many points (narrow Gaussians) kAuto switches to
// the equivalent primal form V f(0) - 1 evaluated on Lambda itself.
FlatnessResult FlatnessFactor(const Lattice& lattice,
                              const CovarianceSpec& spread,
                              double tol = kDefaultSeriesTol,
                              FlatnessRoute route = FlatnessRoute::kAuto);
FlatnessResult FlatnessFactor(const Lattice& lattice, double sigma,
                              double tol = kDefaultSeriesTol,
                              FlatnessRoute route = FlatnessRoute::kAuto);

// eta_eps(Lambda) = sqrt(2 pi) sigma*, with sigma* solving
// sum_{l in Lambda* \ 0} exp(-pi^2 sigma^2 |l|^2) = eps to relative 1e-9.
double SmoothingParameter(const Lattice& lattice, double epsilon);

// gamma = V(Lambda)^{1/n} / |Sigma|^{1/n}, n the complex dimension.
double Vnr(const Lattice& lattice, const CovarianceSpec& spread);
double Vnr(const Lattice& lattice, double sigma);

// f_{sqrt(Sigma), Lambda}(x) = sum_lambda f(x - lambda).
double PeriodicGaussian(const Lattice& lattice, const CovarianceSpec& spread,
                        const CVector& x, double tol = 1e-14);

struct PrimalFlatnessResult {
  double epsilon = 0.0;
  int64_t grid_points = 0;
  int points_per_dim = 0;
};

// max |V f(x) - 1| over a deterministic grid of the fundamental
// parallelepiped (coefficients k/g, g = points per dimension) plus points
// near every corner. Approximate; used as a cross-check of FlatnessFactor.
// g is min(65, floor(max_points^{1/d})).
PrimalFlatnessResult PrimalFlatnessGrid(const Lattice& lattice,
                                        const CovarianceSpec& spread,
                                        int64_t max_points = 1 << 18);

}  // namespace wtl

#endif  // WTL_GAUSSIAN_H_
