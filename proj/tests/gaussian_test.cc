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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "test_util.h"
#include "wtl/errors.h"
#include "wtl/gaussian.h"

namespace wtl {
namespace {

constexpr double kPi = 3.14159265358979323846;

// sum_{|k| <= 8} exp(-pi tau k^2).
double ThetaZ(double tau) {
  double s = 0.0;
  for (int k = -8; k <= 8; ++k) s += std::exp(-kPi * tau * k * k);
  return s;
}

// Direct sum of exp(-pi |B k|^2) over the box |k_i| <= r, origin excluded.
double BoxSum(const RMatrix& b, int r) {
  const int d = static_cast<int>(b.cols());
  std::vector<int> k(d, -r);
  double s = 0.0;
  while (true) {
    RVector v = RVector::Zero(b.rows());
    bool zero = true;
    for (int i = 0; i < d; ++i) {
      v += b.col(i) * k[i];
      zero &= k[i] == 0;
    }
    if (!zero) s += std::exp(-kPi * v.squaredNorm());
    int i = 0;
    while (i < d && ++k[i] > r) k[i++] = -r;
    if (i == d) break;
  }
  return s;
}

TEST(CovarianceSpecTest, HermitianRealForm) {
  CMatrix s(2, 2);
  s << 2.0, Complex(0.5, 0.25), Complex(0.5, -0.25), 1.0;
  const CovarianceSpec params = CovarianceSpec::FromHermitian(s);
  const RMatrix r = params.real_form();
  EXPECT_DOUBLE_EQ(r(0, 0), 2.0);
  EXPECT_DOUBLE_EQ(r(0, 1), 0.5);
  EXPECT_DOUBLE_EQ(r(2, 1), 0.25);   // Im part, lower-left block
  EXPECT_DOUBLE_EQ(r(0, 3), -0.25);  // -Im part, upper-right block
  EXPECT_NEAR(params.det(), std::real(s.determinant()), 1e-12);
  EXPECT_FALSE(params.is_spherical());
  EXPECT_TRUE(CovarianceSpec::Spherical(2, 3.0).is_spherical());
  EXPECT_NEAR(CovarianceSpec::Spherical(2, 3.0).det(), 81.0, 1e-9);
}

TEST(CovarianceSpecTest, RejectsIndefinite) {
  CMatrix s = CMatrix::Identity(2, 2);
  s(1, 1) = -1.0;
  EXPECT_THROW(CovarianceSpec::FromHermitian(s), Error);
  CMatrix ns = CMatrix::Identity(2, 2);
  ns(0, 1) = 1.0;
  EXPECT_THROW(CovarianceSpec::FromHermitian(ns), Error);
}

TEST(CovarianceSpecTest, TransformedIsCongruence) {
  Rng rng(31);
  const CMatrix a = ComplexGaussianMatrix(2, 2, 1.0, rng);
  CMatrix s = ComplexGaussianMatrix(2, 2, 1.0, rng);
  s = s * s.adjoint() + CMatrix::Identity(2, 2);
  const CovarianceSpec t = CovarianceSpec::FromHermitian(s).Transformed(a);
  const CovarianceSpec direct = CovarianceSpec::FromHermitian(a * s * a.adjoint());
  EXPECT_LT((t.real_form() - direct.real_form()).norm(), 1e-12);
}

TEST(GaussianLatticeSumTest, MatchesBoxSum) {
  Rng rng(32);
  for (int trial = 0; trial < 5; ++trial) {
    const RMatrix b = testing::RandomLattice(1, rng).real_generator() * 0.8;
    const SeriesResult s = GaussianLatticeSum(b, 1e-14);
    EXPECT_NEAR(s.nonzero_sum, BoxSum(b, 25), 1e-12);
    EXPECT_LE(s.tail_bound, 1e-14);
  }
}

TEST(GaussianLatticeSumTest, CapRaisesTruncationWithPartialSum) {
  const RMatrix b = 0.05 * RMatrix::Identity(4, 4);
  try {
    GaussianLatticeSum(b, 1e-12, 1000);
    FAIL();
  } catch (const TruncationError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTruncation);
    EXPECT_GT(e.partial_sum(), 0.0);
  }
}

TEST(ThetaSeriesTest, IntegerLatticeAtOne) {
  const double theta_z = ThetaZ(1.0);
  EXPECT_NEAR(theta_z, 1.0864348, 1e-7);
  const SeriesResult s = ThetaSeries(Lattice::GaussianIntegers(1), 1.0);
  EXPECT_NEAR(1.0 + s.nonzero_sum, theta_z * theta_z, 1e-12);
}

TEST(ThetaSeriesTest, LargeTauOnlyOrigin) {
  const SeriesResult s = ThetaSeries(Lattice::GaussianIntegers(1), 100.0);
  EXPECT_LT(s.nonzero_sum, 1e-12);
}

TEST(ThetaSeriesTest, ScalingIdentity) {
  Rng rng(33);
  const Lattice l = testing::RandomLattice(2, rng);
  const double c = 1.7, tau = 0.6;
  EXPECT_NEAR(ThetaSeries(l.Scaled(c), tau).nonzero_sum,
              ThetaSeries(l, c * c * tau).nonzero_sum, 1e-11);
}

TEST(FlatnessTest, GaussianIntegersAtInverseRootPi) {
  const RMatrix id = RMatrix::Identity(2, 2);
  const double oracle = BoxSum(id, 6);
  const FlatnessResult f =
      FlatnessFactor(Lattice::GaussianIntegers(1), 1.0 / std::sqrt(kPi));
  EXPECT_NEAR(oracle, 0.1803, 1e-4);
  EXPECT_NEAR(f.epsilon, oracle, 1e-6);
  EXPECT_LE(f.tail_bound, kDefaultSeriesTol);
}

TEST(FlatnessTest, JointScalingInvariance) {
  Rng rng(34);
  const Lattice l = testing::RandomLattice(2, rng);
  EXPECT_NEAR(FlatnessFactor(l.Scaled(2.5), 2.5 * 0.7).epsilon,
              FlatnessFactor(l, 0.7).epsilon, 1e-10);
}

TEST(FlatnessTest, CorrelatedExceedsIsotropicAtEqualDeterminant) {
  const Lattice z2 = Lattice::GaussianIntegers(1);
  RMatrix iso = 0.25 * RMatrix::Identity(2, 2);
  RMatrix corr = RMatrix::Zero(2, 2);
  corr(0, 0) = 0.25 * 6.0;
  corr(1, 1) = 0.25 / 6.0;
  const double e_iso =
      FlatnessFactor(z2, CovarianceSpec::FromReal(iso)).epsilon;
  const double e_corr =
      FlatnessFactor(z2, CovarianceSpec::FromReal(corr)).epsilon;
  // Dual sum for diagonal real covariance S factors per coordinate.
  auto axis = [](double s) {
    double t = 0.0;
    for (int k = -20; k <= 20; ++k) t += std::exp(-kPi * kPi * s * k * k);
    return t;
  };
  EXPECT_NEAR(e_iso, axis(0.25) * axis(0.25) - 1.0, 1e-10);
  EXPECT_NEAR(e_corr, axis(1.5) * axis(0.25 / 6.0) - 1.0, 1e-10);
  EXPECT_GT(e_corr, e_iso);
}

TEST(FlatnessTest, DualAndPrimalRoutesAgree) {
  const Lattice z2 = Lattice::GaussianIntegers(1);
  for (double sigma : {0.3, 0.5, 1.0}) {
    const double dual = FlatnessFactor(z2, sigma, 1e-13, FlatnessRoute::kDual).epsilon;
    const double primal =
        FlatnessFactor(z2, sigma, 1e-13, FlatnessRoute::kPrimal).epsilon;
    EXPECT_NEAR(dual, primal, 1e-9 * std::max(1.0, dual));
  }
}

TEST(SmoothingParameterTest, GaussianIntegers) {
  const double eps = BoxSum(RMatrix::Identity(2, 2), 6);
  EXPECT_NEAR(SmoothingParameter(Lattice::GaussianIntegers(1), eps),
              std::sqrt(2.0), 1e-8);
}

TEST(SmoothingParameterTest, MonotoneAndScaling) {
  Rng rng(35);
  const Lattice l = testing::RandomLattice(1, rng);
  const double a = SmoothingParameter(l, 0.01);
  const double b = SmoothingParameter(l, 0.1);
  EXPECT_GT(a, b);
  EXPECT_NEAR(SmoothingParameter(l.Scaled(3.0), 0.1), 3.0 * b, 1e-7 * b);
  EXPECT_NEAR(FlatnessFactor(l, b / std::sqrt(2.0 * kPi)).epsilon, 0.1, 1e-8);
  EXPECT_THROW(SmoothingParameter(l, 1.5), Error);
}

TEST(VnrTest, BasicValues) {
  EXPECT_NEAR(Vnr(Lattice::GaussianIntegers(3), 1.0), 1.0, 1e-12);
  Rng rng(36);
  const Lattice l = testing::RandomLattice(2, rng);
  EXPECT_NEAR(Vnr(l.Scaled(2.0), 0.8), 4.0 * Vnr(l, 0.8), 1e-10);
}

TEST(PeriodicGaussianTest, MatchesDirectSumAndAveragesToInverseVolume) {
  const Lattice z = Lattice::GaussianIntegers(1);
  const CovarianceSpec s = CovarianceSpec::Spherical(1, 0.6);
  CVector x(1);
  x(0) = Complex(0.3, -0.2);
  double direct = 0.0;
  for (int a = -10; a <= 10; ++a) {
    for (int b = -10; b <= 10; ++b) {
      direct += std::exp(-std::norm(x(0) - Complex(a, b)) / 0.36);
    }
  }
  direct /= kPi * 0.36;
  EXPECT_NEAR(PeriodicGaussian(z, s, x), direct, 1e-12);

  Rng rng(37);
  RMatrix b(2, 2);
  b << 1.0, 0.4, 0.0, 0.9;
  const Lattice l = Lattice::FromRealGenerator(b);
  double mean = 0.0;
  const int n = 4000;
  for (int i = 0; i < n; ++i) {
    RVector u(2);
    u << rng.Uniform01(), rng.Uniform01();
    const RVector p = b * u;
    CVector y(1);
    y(0) = Complex(p(0), p(1));
    mean += l.volume() * PeriodicGaussian(l, s, y) / n;
  }
  EXPECT_NEAR(mean, 1.0, 0.02);
}

TEST(PrimalFlatnessGridTest, CloseToCertifiedValue) {
  Rng rng(38);
  const Lattice l = testing::RandomLattice(1, rng);
  const CovarianceSpec s = CovarianceSpec::Spherical(1, 0.45);
  const PrimalFlatnessResult g = PrimalFlatnessGrid(l, s);
  const double exact = FlatnessFactor(l, s).epsilon;
  EXPECT_GE(g.points_per_dim, 65);
  EXPECT_LE(g.epsilon, exact + 1e-10);
  EXPECT_NEAR(g.epsilon, exact, 1e-4);
}

}  // namespace
}  // namespace wtl
