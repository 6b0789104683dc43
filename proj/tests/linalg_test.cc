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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "wtl/errors.h"
#include "wtl/linalg.h"
#include "wtl/matrix_io.h"
#include "wtl/rng.h"
#include "wtl/stats.h"

namespace wtl {
namespace {

TEST(RngTest, SameSeedSameStream) {
  Rng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const uint64_t x = a.NextU64();
    EXPECT_EQ(x, b.NextU64());
    differs |= x != c.NextU64();
  }
  EXPECT_TRUE(differs);
}

TEST(RngTest, DeriveSeedIsXor) {
  EXPECT_EQ(DeriveSeed(0b1010, 0b0110), 0b1100u);
  EXPECT_EQ(DeriveSeed(77, 0), 77u);
}

TEST(RngTest, UniformIntCoversRange) {
  Rng rng(1);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) ++counts[rng.UniformInt(7)];
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
}

TEST(RngTest, NormalMoments) {
  Rng rng(2);
  std::vector<double> x(200000);
  for (double& v : x) v = rng.Normal();
  EXPECT_NEAR(Mean(x), 0.0, 0.01);
  EXPECT_NEAR(Variance(x), 1.0, 0.01);
}

TEST(LinalgTest, EmbeddingRoundTrip) {
  Rng rng(3);
  const CMatrix a = ComplexGaussianMatrix(3, 3, 1.0, rng);
  const CVector x = ComplexGaussianMatrix(3, 1, 1.0, rng).col(0);
  const RVector ex = EmbedVector(x);
  ASSERT_EQ(ex.size(), 6);
  EXPECT_DOUBLE_EQ(ex(0), x(0).real());
  EXPECT_DOUBLE_EQ(ex(3), x(0).imag());
  EXPECT_LT((ComplexifyVector(ex) - x).norm(), 1e-15);
  EXPECT_LT((EmbedOperator(a) * ex - EmbedVector(a * x)).norm(), 1e-12);
}

TEST(LinalgTest, KronMatchesDefinition) {
  CMatrix a(2, 2), b(2, 1);
  a << 1.0, 2.0, Complex(0, 1), 3.0;
  b << 5.0, -1.0;
  const CMatrix k = Kron(a, b);
  ASSERT_EQ(k.rows(), 4);
  ASSERT_EQ(k.cols(), 2);
  EXPECT_EQ(k(0, 0), Complex(5, 0));
  EXPECT_EQ(k(1, 1), Complex(-2, 0));
  EXPECT_EQ(k(2, 0), Complex(0, 5));
  EXPECT_EQ(k(3, 1), Complex(-3, 0));
}

TEST(LinalgTest, PerSlotOperatorActsOnColumns) {
  Rng rng(4);
  const int n = 2, t = 3;
  const CMatrix h = ComplexGaussianMatrix(3, n, 1.0, rng);
  const CMatrix x = ComplexGaussianMatrix(n, t, 1.0, rng);
  CVector vx(n * t), vy(3 * t);
  const CMatrix y = h * x;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < t; ++c) vx(r * t + c) = x(r, c);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < t; ++c) vy(r * t + c) = y(r, c);
  EXPECT_LT((PerSlotOperator(h, t) * vx - vy).norm(), 1e-12);
}

TEST(LinalgTest, HaarUnitaryIsUnitary) {
  Rng rng(5);
  const CMatrix u = HaarUnitary(4, rng);
  EXPECT_LT((u.adjoint() * u - CMatrix::Identity(4, 4)).norm(), 1e-12);
}

TEST(LinalgTest, SpectralQuantities) {
  CMatrix a = CMatrix::Zero(2, 2);
  a(0, 0) = 4.0;
  a(1, 1) = Complex(0, 0.5);
  EXPECT_NEAR(SpectralNorm(a), 4.0, 1e-12);
  EXPECT_NEAR(ConditionNumber(a), 8.0, 1e-12);
  RMatrix s(2, 2);
  s << 2.0, 1.0, 1.0, 2.0;
  EXPECT_NEAR(MinEigenvalue(s), 1.0, 1e-12);
  EXPECT_FALSE(IsHermitian(a));
  EXPECT_TRUE(IsHermitian(a * a.adjoint()));
}

TEST(MatrixIoTest, RoundTripIsExact) {
  Rng rng(6);
  const CMatrix m = ComplexGaussianMatrix(3, 2, 1.0, rng);
  std::stringstream ss;
  WriteMatrix(ss, m);
  const CMatrix back = ReadMatrix(ss);
  EXPECT_EQ(back, m);
}

TEST(MatrixIoTest, ParsesCommentsAndPlainReals) {
  std::stringstream ss("# header\n1 2+1i\n\n-3 0-0.5i\n");
  const CMatrix m = ReadMatrix(ss);
  ASSERT_EQ(m.rows(), 2);
  EXPECT_EQ(m(0, 1), Complex(2, 1));
  EXPECT_EQ(m(1, 1), Complex(0, -0.5));
}

TEST(MatrixIoTest, RaggedRowsRejected) {
  std::stringstream ss("1 2\n3\n");
  EXPECT_THROW(ReadMatrix(ss), Error);
}

TEST(StatsTest, WilsonMatchesClosedForm) {
  const double z = 1.959963984540054;
  const double n = 200, k = 13, ph = k / n;
  const double denom = 1 + z * z / n;
  const double mid = (ph + z * z / (2 * n)) / denom;
  const double half =
      z * std::sqrt(ph * (1 - ph) / n + z * z / (4 * n * n)) / denom;
  const Interval ci = WilsonInterval(13, 200);
  EXPECT_NEAR(ci.lo, mid - half, 1e-12);
  EXPECT_NEAR(ci.hi, mid + half, 1e-12);
  const Interval zero = WilsonInterval(0, 100);
  EXPECT_LE(zero.lo, 1e-15);
  EXPECT_GT(zero.hi, 0.0);
}

TEST(StatsTest, ChiSquareSurvivalKnownQuantiles) {
  EXPECT_NEAR(ChiSquareSurvival(3.841458820694124, 1), 0.05, 1e-10);
  EXPECT_NEAR(ChiSquareSurvival(2.0, 2), std::exp(-1.0), 1e-12);
}

TEST(StatsTest, ChiSquareDetectsBias) {
  Rng rng(7);
  std::vector<int64_t> fair(4, 0), biased(4, 0);
  for (int i = 0; i < 40000; ++i) {
    ++fair[rng.UniformInt(4)];
    const double u = rng.Uniform01();
    ++biased[u < 0.28 ? 0 : u < 0.5 ? 1 : u < 0.75 ? 2 : 3];
  }
  const std::vector<double> probs(4, 0.25);
  EXPECT_GT(ChiSquareTest(fair, probs, 40000).p_value, 0.001);
  EXPECT_LT(ChiSquareTest(biased, probs, 40000).p_value, 1e-6);
}

TEST(StatsTest, KolmogorovSmirnovUniform) {
  Rng rng(8);
  std::vector<double> u(5000), v(5000);
  for (size_t i = 0; i < u.size(); ++i) {
    u[i] = rng.Uniform01();
    v[i] = u[i] * u[i];
  }
  auto cdf = [](double x) { return std::clamp(x, 0.0, 1.0); };
  EXPECT_GT(KolmogorovSmirnov(u, cdf).p_value, 0.001);
  EXPECT_LT(KolmogorovSmirnov(v, cdf).p_value, 1e-6);
}

TEST(StatsTest, BootstrapStdErrorOfMean) {
  Rng rng(9);
  std::vector<double> x(2000);
  for (double& v : x) v = rng.Normal();
  const double se = BootstrapStdError(x, Mean, 400, rng);
  EXPECT_NEAR(se, 1.0 / std::sqrt(2000.0), 0.006);
}

}  // namespace
}  // namespace wtl
