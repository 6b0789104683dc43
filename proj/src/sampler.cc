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

#include "wtl/sampler.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "wtl/enumeration.h"
#include "wtl/errors.h"
#include "wtl/stats.h"

namespace wtl {
namespace {

constexpr double kCutoff = 1e-20;
constexpr double kEnumerationSpan = 40.0;
constexpr int64_t kMaxEnumeratedPoints = 1000000;

int64_t SamplePoisson(double mean, Rng& rng) {
  if (mean <= 0.0) return 0;
  if (mean > 30.0) {
    const double v = std::round(mean + std::sqrt(mean) * rng.Normal());
    return static_cast<int64_t>(std::max(0.0, v));
  }
  const double limit = std::exp(-mean);
  int64_t k = 0;
  double prod = rng.Uniform01();
  while (prod > limit) {
    ++k;
    prod *= rng.Uniform01();
  }
  return k;
}

}  // namespace

double IntegerGaussianNormalizer(double a, double c) {
  const int64_t k0 = std::llround(c);
  auto w = [&](int64_t k) {
    const double t = static_cast<double>(k) - c;
    return std::exp(-a * t * t);
  };
  double z = w(k0);
  for (int64_t j = 1;; ++j) {
    const double wl = w(k0 - j), wr = w(k0 + j);
    z += wl + wr;
    if (std::max(wl, wr) <= kCutoff * z) break;
  }
  return z;
}

IntegerDraw SampleIntegerGaussian(double a, double c, Rng& rng) {
  const int64_t k0 = std::llround(c);
  auto w = [&](int64_t k) {
    const double t = static_cast<double>(k) - c;
    return std::exp(-a * t * t);
  };
  IntegerDraw out;
  out.normalizer = IntegerGaussianNormalizer(a, c);
  const double target = rng.Uniform01() * out.normalizer;
  double acc = w(k0);
  out.value = k0;
  if (acc > target) return out;
  for (int64_t j = 1;; ++j) {
    const double wl = w(k0 - j);
    acc += wl;
    if (acc > target) {
      out.value = k0 - j;
      return out;
    }
    const double wr = w(k0 + j);
    acc += wr;
    if (acc > target) {
      out.value = k0 + j;
      return out;
    }
    if (std::max(wl, wr) <= kCutoff * acc) {
      out.value = k0;
      return out;
    }
  }
}

LatticeGaussianSampler::LatticeGaussianSampler(const Lattice& lattice,
                                               const CovarianceSpec& spread)
    : lattice_(lattice), spread_(spread) {
  if (spread.complex_dim() != lattice.complex_dim()) {
    Fail(ErrorCode::kShapeError, "covariance dimension does not match lattice");
  }
  const int d = lattice.real_dim();
  const double spacing_sq = std::pow(lattice.volume(), 2.0 / d);
  if (spread.min_eigenvalue() < 1e-6 * spacing_sq) {
    Fail(ErrorCode::kDegenerateSpread,
         "spread is numerically degenerate relative to the lattice");
  }
  whiten_ = spread.cholesky()
                .triangularView<Eigen::Lower>()
                .solve(RMatrix::Identity(d, d));
  reduced_ = ReduceBasis(whiten_ * lattice.real_generator());
  level_a_.resize(d);
  level_z0_.resize(d);
  double log_accept = 0.0;
  for (int k = 0; k < d; ++k) {
    level_a_[k] = reduced_.r(k, k) * reduced_.r(k, k);
    level_z0_[k] = IntegerGaussianNormalizer(level_a_[k], 0.0);
    log_accept += std::log(IntegerGaussianNormalizer(level_a_[k], 0.5)) -
                  std::log(level_z0_[k]);
  }
  worst_case_acceptance_ = std::exp(log_accept);
}

IVector LatticeGaussianSampler::SampleKlein(const RVector& v, Rng& rng) const {
  const int d = static_cast<int>(level_a_.size());
  const RMatrix& r = reduced_.r;
  IVector z(d);
  while (true) {
    double log_ratio = 0.0;
    for (int k = d - 1; k >= 0; --k) {
      double s = v(k);
      for (int j = k + 1; j < d; ++j) s += r(k, j) * static_cast<double>(z(j));
      const double c = -s / r(k, k);
      const IntegerDraw draw = SampleIntegerGaussian(level_a_[k], c, rng);
      z(k) = draw.value;
      log_ratio += std::log(draw.normalizer) - std::log(level_z0_[k]);
    }
    // Normalizers peak at integer centers, so the ratio never exceeds one.
    if (rng.Uniform01() < std::exp(std::min(0.0, log_ratio))) return z;
  }
}

IVector LatticeGaussianSampler::SampleByEnumeration(const RVector& v,
                                                    Rng& rng) const {
  const RMatrix& r = reduced_.r;
  double best = std::numeric_limits<double>::infinity();
  EnumerateBall(r, v, best, [&](const IVector&, double dist) {
    best = std::min(best, dist);
    return best;
  });
  std::vector<std::pair<double, IVector>> points;
  const bool complete = EnumerateBall(
      r, v, best + kEnumerationSpan,
      [&](const IVector& z, double dist) {
        points.emplace_back(dist, z);
        return best + kEnumerationSpan;
      },
      kMaxEnumeratedPoints);
  if (!complete) {
    Fail(ErrorCode::kTruncation,
         "narrow-spread sampler exceeded its enumeration budget");
  }
  std::vector<double> cumulative(points.size());
  double acc = 0.0;
  for (size_t i = 0; i < points.size(); ++i) {
    acc += std::exp(-(points[i].first - best));
    cumulative[i] = acc;
  }
  const double target = rng.Uniform01() * acc;
  const auto it =
      std::upper_bound(cumulative.begin(), cumulative.end(), target);
  const size_t idx = std::min<size_t>(it - cumulative.begin(), points.size() - 1);
  return points[idx].second;
}

LatticePoint LatticeGaussianSampler::Sample(const CVector& center,
                                            Rng& rng) const {
  if (center.size() != lattice_.complex_dim()) {
    Fail(ErrorCode::kShapeError, "center dimension does not match lattice");
  }
  const RVector v = reduced_.q.transpose() * (whiten_ * EmbedVector(center));
  const IVector z =
      enumerates() ? SampleByEnumeration(v, rng) : SampleKlein(v, rng);
  LatticePoint out;
  out.coeffs = reduced_.unimodular * z;
  out.coords = lattice_.Point(out.coeffs) + center;
  return out;
}

LatticePoint SampleDiscreteGaussian(const DiscreteGaussianSpec& params,
                                    Rng& rng) {
  return LatticeGaussianSampler(params.lattice, params.spread)
      .Sample(params.center, rng);
}

SumClosenessReport SumClosenessCheck(const DiscreteGaussianSpec& params,
                                     const CovarianceSpec& noise,
                                     int64_t n_samples, Rng& rng) {
  if (params.lattice.complex_dim() != 1 || noise.complex_dim() != 1) {
    Fail(ErrorCode::kUnsupportedShape,
         "density-ratio check supports complex dimension 1 only");
  }
  const RMatrix& s1 = params.spread.real_form();
  const RMatrix& s2 = noise.real_form();
  const RMatrix s3 = (s1.inverse() + s2.inverse()).inverse();
  SumClosenessReport out;
  out.epsilon =
      FlatnessFactor(params.lattice,
                     CovarianceSpec::FromReal(0.5 * (s3 + s3.transpose())))
          .epsilon;
  out.bound = 4.0 * out.epsilon;
  if (out.epsilon > 0.5) {
    Fail(ErrorCode::kPreconditionViolated,
         "flatness factor at Sigma3 exceeds 1/2");
  }
  const CovarianceSpec s0 = CovarianceSpec::FromReal(s1 + s2);
  const RMatrix whiten0 = s0.cholesky()
                              .triangularView<Eigen::Lower>()
                              .solve(RMatrix::Identity(2, 2));
  const LatticeGaussianSampler sampler(params.lattice, params.spread);

  constexpr int kBinsPerAxis = 4;
  constexpr double kLo = -1.0, kWidth = 0.5;
  std::vector<int64_t> counts(kBinsPerAxis * kBinsPerAxis, 0);
  for (int64_t i = 0; i < n_samples; ++i) {
    const RVector x1 = EmbedVector(sampler.Sample(params.center, rng).coords);
    RVector g(2);
    g << rng.Normal(), rng.Normal();
    const RVector y = x1 + noise.cholesky() * g / std::sqrt(2.0);
    const RVector w = whiten0 * y;
    const int bx = static_cast<int>(std::floor((w(0) - kLo) / kWidth));
    const int by = static_cast<int>(std::floor((w(1) - kLo) / kWidth));
    if (bx < 0 || by < 0 || bx >= kBinsPerAxis || by >= kBinsPerAxis) continue;
    ++counts[by * kBinsPerAxis + bx];
  }
  // Whitened target: two independent N(0, 1/2) coordinates.
  std::vector<double> axis_prob(kBinsPerAxis);
  for (int b = 0; b < kBinsPerAxis; ++b) {
    const double a = kLo + b * kWidth;
    axis_prob[b] = 0.5 * (std::erf(a + kWidth) - std::erf(a));
  }
  int64_t inside = 0;
  for (int64_t c : counts) inside += c;
  const int64_t outside = n_samples - inside;
  auto max_deviation = [&](const std::vector<int64_t>& c, double total) {
    double dev = 0.0;
    for (int by = 0; by < kBinsPerAxis; ++by) {
      for (int bx = 0; bx < kBinsPerAxis; ++bx) {
        const double p = axis_prob[bx] * axis_prob[by];
        const double ratio =
            static_cast<double>(c[by * kBinsPerAxis + bx]) / (total * p);
        dev = std::max(dev, std::abs(ratio - 1.0));
      }
    }
    return dev;
  };
  out.samples = n_samples;
  out.bins = kBinsPerAxis * kBinsPerAxis;
  if (n_samples <= 0) return out;
  out.max_deviation = max_deviation(counts, static_cast<double>(n_samples));
  std::vector<double> reps;
  std::vector<int64_t> boot(counts.size());
  for (int b = 0; b < 200; ++b) {
    int64_t total = SamplePoisson(static_cast<double>(outside), rng);
    for (size_t i = 0; i < counts.size(); ++i) {
      boot[i] = SamplePoisson(static_cast<double>(counts[i]), rng);
      total += boot[i];
    }
    reps.push_back(max_deviation(boot, static_cast<double>(total)));
  }
  out.bootstrap_se = std::sqrt(Variance(reps));
  out.pass = out.max_deviation <= out.bound + 3.0 * out.bootstrap_se;
  return out;
}

}  // namespace wtl
