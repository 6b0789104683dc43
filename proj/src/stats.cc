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

#include "wtl/stats.h"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>

#include "wtl/errors.h"
#include "wtl/rng.h"

namespace wtl {

Interval WilsonInterval(int64_t successes, int64_t trials, double confidence) {
  if (trials <= 0) return {0.0, 1.0};
  const boost::math::normal normal;
  const double z = boost::math::quantile(normal, 0.5 + confidence / 2.0);
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double denom = 1.0 + z * z / n;
  const double center = (phat + z * z / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(phat * (1.0 - phat) / n + z * z / (4.0 * n * n)) / denom;
  const double lo = successes == 0 ? 0.0 : std::max(0.0, center - half);
  const double hi = successes == trials ? 1.0 : std::min(1.0, center + half);
  return {lo, hi};
}

double Mean(const std::vector<double>& x) {
  if (x.empty()) return 0.0;
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

double Variance(const std::vector<double>& x) {
  if (x.size() < 2) return 0.0;
  const double m = Mean(x);
  double s = 0.0;
  for (double v : x) s += (v - m) * (v - m);
  return s / static_cast<double>(x.size() - 1);
}

double ChiSquareSurvival(double stat, double dof) {
  if (stat <= 0.0) return 1.0;
  return boost::math::cdf(
      boost::math::complement(boost::math::chi_squared(dof), stat));
}

ChiSquareResult ChiSquareTest(const std::vector<int64_t>& observed,
                              const std::vector<double>& expected,
                              int64_t total, double min_expected) {
  if (observed.size() != expected.size()) {
    Fail(ErrorCode::kInvalidArgument, "observed/expected size mismatch");
  }
  const double n = static_cast<double>(total);
  double other_expected = n;
  double other_observed = n;
  double stat = 0.0;
  int bins = 0;
  for (size_t i = 0; i < observed.size(); ++i) {
    const double e = expected[i] * n;
    if (e < min_expected) continue;
    const double o = static_cast<double>(observed[i]);
    stat += (o - e) * (o - e) / e;
    other_expected -= e;
    other_observed -= o;
    ++bins;
  }
  if (other_expected > 1e-9 * n) {
    stat += (other_observed - other_expected) *
            (other_observed - other_expected) / other_expected;
    ++bins;
  }
  ChiSquareResult out;
  out.statistic = stat;
  out.dof = std::max(1, bins - 1);
  out.p_value = ChiSquareSurvival(stat, out.dof);
  return out;
}

KsResult KolmogorovSmirnov(std::vector<double> sample,
                           const std::function<double(double)>& cdf) {
  KsResult out;
  if (sample.empty()) return out;
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    d = std::max({d, f - static_cast<double>(i) / n,
                  static_cast<double>(i + 1) / n - f});
  }
  out.statistic = d;
  const double rn = std::sqrt(n);
  const double lambda = (rn + 0.12 + 0.11 / rn) * d;
  double p = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    p += (k % 2 == 1 ? 2.0 : -2.0) * term;
    if (term < 1e-16) break;
  }
  out.p_value = std::clamp(p, 0.0, 1.0);
  if (lambda < 0.2) out.p_value = 1.0;
  return out;
}

double BootstrapStdError(
    const std::vector<double>& data,
    const std::function<double(const std::vector<double>&)>& statistic,
    int replicates, Rng& rng) {
  if (data.empty() || replicates < 2) return 0.0;
  std::vector<double> stats;
  stats.reserve(replicates);
  std::vector<double> resample(data.size());
  for (int b = 0; b < replicates; ++b) {
    for (auto& v : resample) v = data[rng.UniformInt(data.size())];
    stats.push_back(statistic(resample));
  }
  return std::sqrt(Variance(stats));
}

}  // namespace wtl
