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
#include "wtl/codec.h"
#include "wtl/construction_a.h"
#include "wtl/gaussian.h"
#include "wtl/security.h"

namespace wtl {
namespace {

CMatrix RandomPsd(int n, Rng& rng, double scale) {
  const CMatrix g = ComplexGaussianMatrix(n, n, scale, rng);
  return g * g.adjoint();
}

TEST(FlatnessPropertyTest, PartialOrder) {
  Rng rng(301);
  const Lattice lat = testing::RandomLattice(2, rng);
  for (int i = 0; i < 100; ++i) {
    const CMatrix s2 = RandomPsd(2, rng, 0.3) + 0.05 * CMatrix::Identity(2, 2);
    const CMatrix s1 = s2 + RandomPsd(2, rng, 0.1 * rng.Uniform01());
    const double e1 = FlatnessFactor(lat, CovarianceSpec::FromHermitian(s1)).epsilon;
    const double e2 = FlatnessFactor(lat, CovarianceSpec::FromHermitian(s2)).epsilon;
    EXPECT_LE(e1, e2 * (1.0 + 1e-9) + 1e-12) << i;
  }
}

TEST(FlatnessPropertyTest, StrictlyDecreasingWithLimits) {
  Rng rng(302);
  for (const Lattice& lat :
       {Lattice::GaussianIntegers(2), testing::RandomLattice(2, rng)}) {
    double previous = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 20; ++k) {
      const double sigma = 0.1 * std::pow(30.0, k / 20.0);
      const double eps = FlatnessFactor(lat, sigma).epsilon;
      if (previous > kDefaultSeriesTol) {
        EXPECT_LT(eps, previous) << sigma;
      } else {
        EXPECT_LE(eps, previous) << sigma;
      }
      previous = eps;
    }
    EXPECT_LT(previous, 1e-12);
    EXPECT_GT(FlatnessFactor(lat, 0.1).epsilon, 100.0);
  }
}

TEST(FlatnessPropertyTest, PeriodicGaussianBoundedByFlatness) {
  Rng rng(303);
  for (int trial = 0; trial < 5; ++trial) {
    const Lattice lat = testing::RandomLattice(1 + trial % 2, rng);
    const CovarianceSpec spread = CovarianceSpec::FromHermitian(
        RandomPsd(lat.complex_dim(), rng, 0.3) +
        0.1 * CMatrix::Identity(lat.complex_dim(), lat.complex_dim()));
    const double eps = FlatnessFactor(lat, spread).epsilon;
    for (int i = 0; i < 200; ++i) {
      CVector x(lat.complex_dim());
      for (Eigen::Index j = 0; j < x.size(); ++j) {
        x(j) = Complex(3.0 * rng.Normal(), 3.0 * rng.Normal());
      }
      const double dev =
          std::abs(lat.volume() * PeriodicGaussian(lat, spread, x) - 1.0);
      EXPECT_LE(dev, eps + 1e-9);
    }
  }
}

TEST(LeakagePropertyTest, MonotoneInEveryArgument) {
  const std::vector<double> eps = {1e-6, 1e-4, 1e-3, 1e-2, 0.04};
  const std::vector<double> rates = {0.1, 0.5, 1.0, 3.0};
  for (size_t a = 0; a < eps.size(); ++a) {
    for (size_t b = 0; b < rates.size(); ++b) {
      for (int n_e = 1; n_e <= 3; ++n_e) {
        for (int t = 1; t <= 8; t *= 2) {
          const double v = LeakageBound(eps[a], rates[b], n_e, t);
          EXPECT_GE(v, 0.0);
          if (a + 1 < eps.size()) {
            EXPECT_LE(v, LeakageBound(eps[a + 1], rates[b], n_e, t));
          }
          if (b + 1 < rates.size()) {
            EXPECT_LE(v, LeakageBound(eps[a], rates[b + 1], n_e, t));
          }
          EXPECT_LE(v, LeakageBound(eps[a], rates[b], n_e + 1, t));
          EXPECT_LE(v, LeakageBound(eps[a], rates[b], n_e, 2 * t));
        }
      }
    }
  }
}

TEST(SecrecyPropertyTest, FormulationsNeverDisagree) {
  Rng rng(304);
  for (int i = 0; i < 1000; ++i) {
    const int n_a = 1 + i % 2;
    const int t = 1 + (i / 2) % 2;
    const CMatrix h = ComplexGaussianMatrix(n_a, n_a, 1.0, rng);
    const Lattice lat = testing::RandomLattice(n_a * t, rng, 5.0)
                            .Scaled(std::exp(3.0 * rng.Uniform01() - 1.5));
    const VnrCheck c = CheckSecrecy(lat, h, 0.3 + 3.0 * rng.Uniform01(),
                                    0.1 + 3.0 * rng.Uniform01(), t);
    ASSERT_TRUE(c.agree()) << i;
  }
}

TEST(RatePropertyTest, UnitAlphaIsIdentity) {
  Rng rng(305);
  for (int i = 0; i < 200; ++i) {
    const double c_b = 20.0 * rng.Uniform01(), c_e = 20.0 * rng.Uniform01();
    const int n_a = 1 + i % 4;
    EXPECT_EQ(AchievableRate(c_b, c_e, n_a, 1.0), AchievableRate(c_b, c_e, n_a));
    EXPECT_GE(AchievableRate(c_b, c_e, n_a, 1.0 + rng.Uniform01()), 0.0);
  }
}

TEST(PerturbationPropertyTest, CoveringCentersDominate) {
  Rng rng(306);
  CompoundSet set;
  set.n_a = 2;
  set.n_b = 2;
  set.n_e = 2;
  set.power = 4.0;
  set.sigma_b = 0.2;
  set.sigma_e = 1.0;
  set.c_b = 6.0;
  set.c_e = 0.575;
  const double delta = 0.3;
  const ChannelCovering cover =
      QuantizeChannelSpace(set, delta, ChannelRegion::kBall, rng, 4000, 2000);
  ASSERT_LE(cover.max_validated_gap, delta);
  const NestedPair pair = SampleNestedPair(5, 2, 2, 8, 6, rng);
  const CMatrix shrink = delta * CMatrix::Identity(2, 2);
  for (int i = 0; i < 200; ++i) {
    const CMatrix sigma = SampleEveCovariance(set, ChannelRegion::kBall, rng);
    const CMatrix& center = cover.centers[NearestCenter(cover, sigma)];
    if (SpectralDistance(sigma, center) > delta) continue;
    const FlatnessResult probe =
        FlatnessFactor(pair.lattice_e, SlotCovariance(sigma, 2));
    const FlatnessResult bound =
        FlatnessFactor(pair.lattice_e, SlotCovariance(center - shrink, 2));
    EXPECT_LE(probe.epsilon, bound.epsilon + probe.tail_bound + bound.tail_bound);
    EXPECT_NEAR(PerturbationFactor(center, delta),
                std::abs(center.determinant()) /
                    std::abs((center - shrink).determinant()),
                1e-12 * PerturbationFactor(center, delta));
  }
}

TEST(ShellPropertyTest, SecrecyVerdictDependsOnlyOnCapacity) {
  Rng rng(307);
  const double sigma_s = 2.0, sigma_e = 1.0, snr_e = 4.0;
  for (double scale : {1.5, 2.2, 3.0}) {
    const NestedPair pair = SampleNestedPair(5, 2, 2, 8, 6, rng);
    const Lattice lat = pair.lattice_e.Scaled(scale / std::sqrt(5.0));
    bool first = true, verdict = false;
    double eps_lo = 1e300, eps_hi = 0.0;
    for (int i = 0; i < 10; ++i) {
      const CMatrix h = SampleOnShell(2, 2, snr_e, 1.0, rng);
      const VnrCheck c = CheckSecrecy(lat, h, sigma_s, sigma_e, 2);
      if (first) verdict = c.pass_volume;
      first = false;
      EXPECT_EQ(c.pass_volume, verdict);
      const double eps = FlatnessFactor(lat, SlotCovariance(
          EveCovariances(h, sigma_s, sigma_e).sigma, 2)).epsilon;
      eps_lo = std::min(eps_lo, eps);
      eps_hi = std::max(eps_hi, eps);
    }
    EXPECT_GT(eps_hi, eps_lo * (1.0 + 1e-6));
  }
}

TEST(ChannelPropertyTest, ShellResidualAndUnitaryInvariance) {
  Rng rng(308);
  const NestedPair pair = SampleNestedPair(5, 2, 1, 4, 3, rng);
  for (int i = 0; i < 50; ++i) {
    const double snr = 0.5 + 10.0 * rng.Uniform01();
    const double cap = 0.2 + 3.0 * rng.Uniform01();
    const CMatrix h = SampleOnShell(2 + i % 2, 2, snr, cap, rng);
    EXPECT_LT(std::abs(MutualInformation(h, snr) - cap), 1e-9);
    const CMatrix sq = ReduceAntennaMismatch(h, 1e-3);
    const CMatrix q = HaarUnitary(2, rng);
    const double e1 = FlatnessFactor(pair.lattice_e, EveCovariances(sq, 1.5, 1.0).sigma.rows() == 2
        ? SlotCovariance(EveCovariances(sq, 1.5, 1.0).sigma, 1)
        : CovarianceSpec::Spherical(2, 1.0)).epsilon;
    const double e2 = FlatnessFactor(pair.lattice_e,
        SlotCovariance(EveCovariances(q * sq, 1.5, 1.0).sigma, 1)).epsilon;
    EXPECT_NEAR(e1, e2, 1e-9 * std::max(1.0, e1));
  }
}

TEST(ChannelPropertyTest, CompletionUpperBoundsAndConverges) {
  Rng rng(309);
  const NestedPair pair = SampleNestedPair(5, 2, 1, 4, 3, rng);
  const double sigma_s = 1.5, sigma_e = 0.7;
  for (int i = 0; i < 10; ++i) {
    const CMatrix h = ComplexGaussianMatrix(1, 2, 1.0, rng);
    const double exact = FlatnessFactor(
        pair.lattice_e,
        SlotCovariance(EveEffectiveCovariance(h, sigma_s, sigma_e), 1)).epsilon;
    double previous = std::numeric_limits<double>::infinity();
    for (double beta : {0.3, 0.1, 0.03, 0.01, 0.001}) {
      const CMatrix sq = ReduceAntennaMismatch(h, beta);
      const double eps = FlatnessFactor(
          pair.lattice_e,
          SlotCovariance(EveCovariances(sq, sigma_s, sigma_e).sigma, 1)).epsilon;
      EXPECT_GE(eps, exact * (1.0 - 1e-9));
      EXPECT_LE(eps, previous * (1.0 + 1e-9));
      previous = eps;
    }
    EXPECT_NEAR(previous / exact, 1.0, 1e-3);
  }
}

TEST(CodingPropertyTest, CosetMapIsHomomorphism) {
  Rng rng(310);
  for (int trial = 0; trial < 5; ++trial) {
    const int k_e = 1 + trial % 3;
    const NestedPair pair = SampleNestedPair(5, 2, 2, k_e + 2, k_e, rng);
    const int digits = pair.k_b() - pair.k_e();
    EXPECT_NEAR(std::log(pair.lattice_e.volume() / pair.lattice_b.volume()) / pair.t,
                pair.rate, 1e-9);
    for (int i = 0; i < 50; ++i) {
      const int64_t a = static_cast<int64_t>(rng.UniformInt(pair.num_messages()));
      const int64_t b = static_cast<int64_t>(rng.UniformInt(pair.num_messages()));
      int64_t sum = 0, place = 1, ra = a, rb = b;
      for (int d = 0; d < digits; ++d) {
        sum += ((ra % 5 + rb % 5) % 5) * place;
        ra /= 5;
        rb /= 5;
        place *= 5;
      }
      const CVector x = CosetEncode(a, pair) + CosetEncode(b, pair);
      EXPECT_EQ(CosetDecode(x, pair), sum);
      const CVector shift = pair.lattice_e.Point(IVector::Ones(pair.lattice_e.real_dim()));
      EXPECT_EQ(CosetDecode(CosetEncode(a, pair) + shift, pair), a);
    }
  }
}

}  // namespace
}  // namespace wtl
