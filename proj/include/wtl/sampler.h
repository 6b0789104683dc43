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

#ifndef WTL_SAMPLER_H_
#define WTL_SAMPLER_H_

#include <cstdint>

#include "wtl/gaussian.h"
#include "wtl/lattice.h"
#include "wtl/rng.h"

namespace wtl {

// D_{Lambda + c, sqrt(Sigma)}: the distribution on the coset Lambda + c with
// mass proportional to the centered Gaussian density f_{sqrt(Sigma)}.
struct DiscreteGaussianSpec {
  Lattice lattice;
  CVector center;
  CovarianceSpec spread;
};

// Exact sampler for D_{Lambda + c, sqrt(Sigma)}.
//
// Proposals come from Klein's sequential sampler on the LLL-reduced whitened
// basis. A proposal z has probability target(z) / prod_k Z_k(c_k), where Z_k
// is the one-dimensional normalizer at level k; accepting with probability
// prod_k Z_k(c_k) / Z_k(0) <= 1 removes that bias exactly. When the
// worst-case acceptance drops below kMinAcceptance (very narrow spreads) the
// sampler enumerates every coset point within exp(-40) of the mode instead.
// One-dimensional tables are cut where the weight falls below 1e-20 of the
// running total.
class LatticeGaussianSampler {
 public:
  static constexpr double kMinAcceptance = 1e-3;

  // Throws kDegenerateSpread when the smallest eigenvalue of the spread is
  // below 1e-6 times the squared typical lattice spacing V^{2/d}.
  LatticeGaussianSampler(const Lattice& lattice, const CovarianceSpec& spread);

  // Returns x = lambda + center with coeffs the generator coordinates of
  // lambda. Const and thread-compatible: concurrent calls need separate Rngs.
  LatticePoint Sample(const CVector& center, Rng& rng) const;

  double worst_case_acceptance() const { return worst_case_acceptance_; }
  bool enumerates() const { return worst_case_acceptance_ < kMinAcceptance; }
  const Lattice& lattice() const { return lattice_; }

 private:
  IVector SampleKlein(const RVector& v, Rng& rng) const;
  IVector SampleByEnumeration(const RVector& v, Rng& rng) const;

  Lattice lattice_;
  CovarianceSpec spread_;
  RMatrix whiten_;  // L^{-1}
  ReducedBasis reduced_;
  std::vector<double> level_a_;
  std::vector<double> level_z0_;
  double worst_case_acceptance_ = 1.0;
};

LatticePoint SampleDiscreteGaussian(const DiscreteGaussianSpec& params, Rng& rng);

// Weight sum_k exp(-a (k - c)^2) and a draw from the corresponding discrete
// Gaussian on Z.
struct IntegerDraw {
  int64_t value = 0;
  double normalizer = 0.0;
};
IntegerDraw SampleIntegerGaussian(double a, double c, Rng& rng);
double IntegerGaussianNormalizer(double a, double c);

struct SumClosenessReport {
  double epsilon = 0.0;
  double bound = 0.0;  // 4 epsilon
  double max_deviation = 0.0;
  double bootstrap_se = 0.0;
  int bins = 0;
  int64_t samples = 0;
  bool pass = false;
};

// Monte-Carlo check that x1 + x2, x1 ~ D_{Lambda+c, sqrt(Sigma1)} and x2 a
// continuous Gaussian with covariance Sigma2, has density within
// [1 - 4 eps, 1 + 4 eps] of f_{sqrt(Sigma1 + Sigma2)}, where eps is the
// flatness factor at Sigma3 = (Sigma1^{-1} + Sigma2^{-1})^{-1}. Bin
// probabilities are compared on a 4 x 4 grid of whitened coordinates in
// [-1, 1]^2; the standard error of the maximum deviation comes from a
// 200-replicate Poisson bootstrap. Complex dimension 1 only
// (kUnsupportedShape otherwise); kPreconditionViolated when eps > 1/2.
SumClosenessReport SumClosenessCheck(const DiscreteGaussianSpec& params,
                                     const CovarianceSpec& noise,
                                     int64_t n_samples, Rng& rng);

}  // namespace wtl

#endif  // WTL_SAMPLER_H_
