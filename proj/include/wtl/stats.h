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

#ifndef WTL_STATS_H_
#define WTL_STATS_H_

#include <cstdint>
#include <functional>
#include <vector>

namespace wtl {

class Rng;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Wilson score interval for a binomial proportion at the given two-sided
// confidence level.
Interval WilsonInterval(int64_t successes, int64_t trials,
                        double confidence = 0.95);

double Mean(const std::vector<double>& x);
// Unbiased sample variance; 0 for fewer than two values.
double Variance(const std::vector<double>& x);

// Upper tail P(X >= stat) of a chi-squared distribution.
double ChiSquareSurvival(double stat, double dof);

struct ChiSquareResult {
  double statistic = 0.0;
  double dof = 0.0;
  double p_value = 1.0;
};

// Pearson goodness of fit. `expected` holds probabilities summing to at most
// one; any remaining mass forms an extra "other" bin whose observed count is
// total - sum(observed). Bins with expected count below `min_expected` are
// merged into "other".
ChiSquareResult ChiSquareTest(const std::vector<int64_t>& observed,
                              const std::vector<double>& expected,
                              int64_t total, double min_expected = 5.0);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

// One-sample Kolmogorov-Smirnov test against a continuous CDF, using the
// asymptotic Kolmogorov distribution with Stephens' small-sample correction.
KsResult KolmogorovSmirnov(std::vector<double> sample,
                           const std::function<double(double)>& cdf);

// Standard error of `statistic` by nonparametric bootstrap.
double BootstrapStdError(
    const std::vector<double>& data,
    const std::function<double(const std::vector<double>&)>& statistic,
    int replicates, Rng& rng);

}  // namespace wtl

#endif  // WTL_STATS_H_
