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
#include "wtl/channel.h"
#include "wtl/errors.h"
#include "wtl/gaussian.h"

namespace wtl {
namespace {

double LogDetIPlus(const CMatrix& h, double snr) {
  const CMatrix m =
      CMatrix::Identity(h.cols(), h.cols()) + snr * h.adjoint() * h;
  return std::log(std::abs(m.determinant()));
}

CMatrix RandomPd(int n, Rng& rng) {
  const CMatrix a = ComplexGaussianMatrix(n, n, 1.0, rng);
  return a * a.adjoint() + 0.5 * CMatrix::Identity(n, n);
}

TEST(ShellTest, ZeroCapacityIsZeroChannel) {
  Rng rng(71);
  EXPECT_LT(SampleOnShell(2, 2, 10.0, 0.0, rng).norm(), 1e-15);
  EXPECT_LT(IsotropicOnShell(3, 2, 10.0, 0.0).norm(), 1e-15);
}

TEST(ShellTest, IsotropicPoint) {
  const double snr = 4.0, c = 1.5;
  const CMatrix h = IsotropicOnShell(3, 2, snr, c);
  const double alpha = (std::exp(c / 2) - 1.0) / snr;
  EXPECT_LT((h.adjoint() * h - alpha * CMatrix::Identity(2, 2)).norm(), 1e-12);
  EXPECT_NEAR(MutualInformation(h, snr), c, 1e-12);
  const CMatrix wide = IsotropicOnShell(1, 2, snr, c);
  EXPECT_NEAR(LogDetIPlus(wide, snr), c, 1e-12);
}

TEST(ShellTest, RandomDrawsSatisfyConstraint) {
  Rng rng(72);
  for (int i = 0; i < 1000; ++i) {
    const int n_rx = 1 + i % 3;
    const CMatrix h = SampleOnShell(n_rx, 2, 10.0, 3.0, rng);
    ASSERT_EQ(h.rows(), n_rx);
    EXPECT_NEAR(LogDetIPlus(h, 10.0), 3.0, 1e-9);
  }
}

TEST(ApplyChannelTest, NoiselessIdentity) {
  Rng rng(73);
  const CMatrix x = ComplexGaussianMatrix(2, 3, 1.0, rng);
  EXPECT_EQ(ApplyChannel(x, CMatrix::Identity(2, 2), 0.0, rng), x);
}

TEST(ApplyChannelTest, NoiseMoments) {
  Rng rng(74);
  const int t = 100000;
  const double sigma = 0.7;
  const CMatrix h = ComplexGaussianMatrix(2, 2, 1.0, rng);
  const CMatrix y = ApplyChannel(CMatrix::Zero(2, t), h, sigma, rng);
  const CMatrix cov = y * y.adjoint() / static_cast<double>(t);
  EXPECT_NEAR(cov(0, 0).real(), sigma * sigma, 0.02 * sigma * sigma);
  EXPECT_NEAR(cov(1, 1).real(), sigma * sigma, 0.02 * sigma * sigma);
  EXPECT_LT(std::abs(cov(0, 1)), 0.02 * sigma * sigma);
  const CMatrix x = ComplexGaussianMatrix(2, t, 1.0, rng);
  const CMatrix noise = ApplyChannel(x, h, sigma, rng) - h * x;
  EXPECT_NEAR(noise.squaredNorm() / (2.0 * t), sigma * sigma,
              0.02 * sigma * sigma);
}

TEST(AntennaMismatchTest, SingleAntennaCompletion) {
  CMatrix h(1, 2);
  h << 1.0, 0.0;
  EXPECT_NEAR(MutualInformation(h, 1.0), std::log(2.0), 1e-15);
  double previous = 1e9;
  for (double beta : {0.1, 0.01, 0.001}) {
    const CMatrix s = ReduceAntennaMismatch(h, beta);
    ASSERT_EQ(s.rows(), 2);
    const double det = std::exp(LogDetIPlus(s, 1.0));
    EXPECT_NEAR(det, 2.0 * (1.0 + beta * beta), 1e-12);
    EXPECT_LT(det - 2.0, previous);
    previous = det - 2.0;
  }
}

TEST(AntennaMismatchTest, TallChannelUsesTriangularFactor) {
  Rng rng(75);
  const CMatrix h = ComplexGaussianMatrix(3, 2, 1.0, rng);
  const CMatrix r = ReduceAntennaMismatch(h, 0.0);
  ASSERT_EQ(r.rows(), 2);
  EXPECT_LT((r.adjoint() * r - h.adjoint() * h).norm(), 1e-10);
}

TEST(AntennaMismatchTest, SquareIsUnchangedAndRankChecked) {
  Rng rng(76);
  const CMatrix h = ComplexGaussianMatrix(2, 2, 1.0, rng);
  EXPECT_EQ(ReduceAntennaMismatch(h, 0.1), h);
  CMatrix low(3, 2);
  low << 1.0, 2.0, Complex(0, 1), Complex(0, 2), -1.0, -2.0;
  EXPECT_THROW(ReduceAntennaMismatch(low, 0.1), Error);
}

TEST(EveCovarianceTest, IdentityChannel) {
  const double ss = 1.5, se = 0.8;
  const CovarianceBundle b = EveCovariances(CMatrix::Identity(2, 2), ss, se);
  const double inv = 1.0 / (ss * ss) + 1.0 / (se * se);
  EXPECT_LT((b.sigma3.inverse() - inv * CMatrix::Identity(2, 2)).norm(), 1e-12);
  EXPECT_LT((b.sigma - b.sigma3).norm(), 1e-12);
  EXPECT_LT((b.sigma0 - (ss * ss + se * se) * CMatrix::Identity(2, 2)).norm(),
            1e-12);
}

TEST(EveCovarianceTest, ScalarHarmonicMean) {
  CMatrix h(1, 1);
  h(0, 0) = Complex(0.6, -0.8) * 1.3;
  const double ss = 2.0, se = 0.5, g = std::norm(h(0, 0));
  const CovarianceBundle b = EveCovariances(h, ss, se);
  EXPECT_NEAR(b.sigma3(0, 0).real(),
              ss * ss * se * se * g / (se * se + ss * ss * g), 1e-12);
  EXPECT_NEAR(b.sigma(0, 0).real(), 1.0 / (1.0 / (ss * ss) + g / (se * se)),
              1e-12);
}

TEST(EveCovarianceTest, FlatnessPullbackIdentity) {
  Rng rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix h = ComplexGaussianMatrix(2, 2, 1.0, rng);
    const CovarianceBundle b = EveCovariances(h, 1.0, 0.7);
    EXPECT_LT((b.sigma - EveEffectiveCovariance(h, 1.0, 0.7)).norm(), 1e-10);
    const Lattice l = Lattice::GaussianIntegers(2, 1.2);
    const double direct =
        FlatnessFactor(l.Transformed(h), CovarianceSpec::FromHermitian(b.sigma3))
            .epsilon;
    const double pulled =
        FlatnessFactor(l, CovarianceSpec::FromHermitian(b.sigma)).epsilon;
    EXPECT_NEAR(direct, pulled, 1e-9);
  }
}

TEST(EveCovarianceTest, LeftUnitaryInvariance) {
  Rng rng(78);
  const CMatrix h = ComplexGaussianMatrix(2, 2, 1.0, rng);
  const CMatrix q = HaarUnitary(2, rng);
  const CMatrix s1 = EveCovariances(h, 1.0, 0.5).sigma;
  const CMatrix s2 = EveCovariances(q * h, 1.0, 0.5).sigma;
  EXPECT_LT((s1 - s2).norm(), 1e-10);
  const Lattice l = Lattice::GaussianIntegers(2);
  EXPECT_NEAR(FlatnessFactor(l, CovarianceSpec::FromHermitian(s1)).epsilon,
              FlatnessFactor(l, CovarianceSpec::FromHermitian(s2)).epsilon,
              1e-9);
}

TEST(EveCovarianceTest, SingularChannelRejected) {
  CMatrix h = CMatrix::Zero(2, 2);
  h(0, 0) = 1.0;
  h(1, 1) = 1e-14;
  try {
    EveCovariances(h, 1.0, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingularChannel);
  }
}

TEST(SlotCovarianceTest, KroneckerLayout) {
  Rng rng(79);
  const CMatrix s = RandomPd(2, rng);
  const CovarianceSpec params = SlotCovariance(s, 3);
  const CovarianceSpec direct =
      CovarianceSpec::FromHermitian(Kron(s, CMatrix::Identity(3, 3)));
  EXPECT_EQ(params.real_form(), direct.real_form());
  EXPECT_NEAR(params.det(), std::pow(std::real(s.determinant()), 3), 1e-9);
}

TEST(PerturbationTest, FactorIsDeterminantRatio) {
  Rng rng(80);
  const CMatrix s = RandomPd(2, rng);
  const double delta = 0.2;
  const double ratio =
      std::real(s.determinant()) /
      std::real((s - delta * CMatrix::Identity(2, 2)).determinant());
  EXPECT_NEAR(PerturbationFactor(s, delta), ratio, 1e-12);
}

TEST(SpectralDistanceTest, MatchesEigenvalues) {
  Rng rng(81);
  for (int n : {1, 2, 3}) {
    const CMatrix a = RandomPd(n, rng), b = RandomPd(n, rng);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(a - b);
    EXPECT_NEAR(SpectralDistance(a, b), es.eigenvalues().cwiseAbs().maxCoeff(),
                1e-12);
  }
}

CompoundSet SmallSet(int n_a) {
  CompoundSet set;
  set.n_a = n_a;
  set.n_b = n_a;
  set.n_e = n_a;
  set.power = 4.0;
  set.sigma_b = 0.2;
  set.sigma_e = 1.0;
  set.c_b = 10.0;
  set.c_e = 0.575;
  return set;
}

TEST(QuantizeTest, ScalarIntervalCovering) {
  const CompoundSet set = SmallSet(1);
  Rng rng(82);
  const double delta = 0.05;
  const ChannelCovering cov =
      QuantizeChannelSpace(set, delta, ChannelRegion::kBall, rng, 100, 2000);
  const double g_max = std::expm1(set.c_e) / set.snr_e();
  const double hi = set.power;
  const double lo = 1.0 / (1.0 / set.power + g_max / (set.sigma_e * set.sigma_e));
  EXPECT_EQ(cov.centers.size(),
            static_cast<size_t>(std::ceil((hi - lo) / (2.0 * delta))));
  EXPECT_LE(cov.max_validated_gap, delta);
}

TEST(QuantizeTest, MatrixCoveringValidates) {
  const CompoundSet set = SmallSet(2);
  Rng rng(83);
  const ChannelCovering cov =
      QuantizeChannelSpace(set, 0.3, ChannelRegion::kBall, rng, 4000, 4000);
  EXPECT_LE(cov.max_validated_gap, 0.3);
  for (int i = 0; i < 200; ++i) {
    const CMatrix s = SampleEveCovariance(set, ChannelRegion::kBall, rng);
    const int c = NearestCenter(cov, s);
    ASSERT_GE(c, 0);
    double best = 1e9;
    for (const CMatrix& center : cov.centers) {
      best = std::min(best, SpectralDistance(center, s));
    }
    EXPECT_DOUBLE_EQ(SpectralDistance(cov.centers[c], s), best);
  }
}

TEST(QuantizeTest, DeltaTooLarge) {
  const CompoundSet set = SmallSet(1);
  Rng rng(84);
  try {
    QuantizeChannelSpace(set, 10.0, ChannelRegion::kBall, rng, 10, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDeltaTooLarge);
  }
}

TEST(CompoundSetTest, Validation) {
  CompoundSet set = SmallSet(2);
  EXPECT_NO_THROW(set.Validate());
  set.c_e = -1.0;
  EXPECT_THROW(set.Validate(), Error);
  set = SmallSet(2);
  set.n_e = 0;
  EXPECT_THROW(set.Validate(), Error);
}

}  // namespace
}  // namespace wtl
