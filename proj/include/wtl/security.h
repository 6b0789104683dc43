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

#ifndef WTL_SECURITY_H_
#define WTL_SECURITY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wtl/codec.h"
#include "wtl/construction_a.h"
#include "wtl/lattice.h"
#include "wtl/linalg.h"
#include "wtl/rng.h"

namespace wtl {

// 8 n_e T eps R - 8 eps ln(8 eps) nats; 0 at eps = 0 and +inf once 8 eps >= 1.
double LeakageBound(double epsilon, double rate, int n_e, int t);

struct VnrCheck {
  double gamma = 0.0;
  // Volume form: V(Lambda)^{1/(n_a T)} against its threshold.
  double volume_per_dim = 0.0;
  double volume_threshold = 0.0;
  bool pass_vnr = false;
  bool pass_volume = false;
  bool agree() const { return pass_vnr == pass_volume; }
};

bool SecrecyVnrHolds(double gamma);      // gamma < pi
bool ReliabilityVnrHolds(double gamma);  // gamma > pi e

// gamma of (H_e per slot) Lambda_e at kron(Sigma_3, I_T) for a square
// invertible H_e, and the equivalent test
// V^{1/(n_a T)} < pi sigma_s^2 exp(-C_e / n_a), C_e = ln|I + (sigma_s^2 /
// sigma_e^2) H_e^H H_e|.
VnrCheck CheckSecrecy(const Lattice& lattice_e, const CMatrix& h_e_square,
                      double sigma_s, double sigma_e, int t);

// gamma of (R_b per slot) Lambda_b at sigma_b and the equivalent test
// V^{1/(n_a T)} > pi e P exp(-C_b / n_a) with P = snr_b sigma_b^2.
VnrCheck CheckReliability(const Lattice& lattice_b, const CMatrix& h_b,
                          double snr_b, double sigma_b, int t);

// (C_b - C_e - n_a)^+, or (C_b - C_e - n_a - 2 n_a ln alpha)^+ with alpha.
double AchievableRate(double c_b, double c_e, int n_a,
                      std::optional<double> alpha = std::nullopt);

// (1 + snr_b) / (1 + snr_e) > e: positive rate at n_a = 1 with isotropic
// capacities.
bool SnrConditionHolds(double snr_b, double snr_e);

struct EuDecomposition {
  CMatrix e;
  CMatrix u;
  double alpha_observed = 0.0;  // |E^{-1}|_F
};

struct EuVerification {
  bool ok = false;
  std::string reason;
  // A generator of the lattice whose image under U (or U^{-1}) left it.
  std::optional<CVector> counterexample;
};

// Checks A = E U, |det E| = |det U| = 1, and U Lambda = Lambda for U acting
// in every one of `slots` time slots, by generator membership in both
// directions.
EuVerification VerifyEuDecomposition(const CMatrix& a, const EuDecomposition& d,
                                     const Lattice& lattice, int slots);

// Supported cases: n_a = 1 (E = A, U = 1), and diagonal positive A with
// unit determinant when the lattice is closed under diag(eps, 1/eps) for the
// given `diagonal_unit` eps > 1; then U = diag(eps^j, eps^{-j}) with j the
// rounded log_eps of A_00. Throws kUnsupportedShape otherwise and
// kVerificationFailed if the result does not verify.
EuDecomposition EuDecompose(const CMatrix& a, const Lattice& lattice, int slots,
                            double diagonal_unit = 0.0);

// Wraps user-supplied factors after verification (kVerificationFailed).
EuDecomposition EuFromFactors(const CMatrix& a, const CMatrix& e,
                              const CMatrix& u, const Lattice& lattice,
                              int slots);

struct AlgebraicBoundReport {
  double lhs = 0.0;  // eps_Lambda(sqrt(kron(A, I_T)))
  double rhs = 0.0;  // eps_Lambda(|A|^{1/2 n_a} / alpha_observed)
  double slack = 0.0;
  double alpha_observed = 0.0;
};

// Compares both sides of the algebraic flatness bound. `decomposition` is the
// EU decomposition of sqrt(A) / |A|^{1/2 n_a}, whose dual lattice action is
// what the bound uses.
AlgebraicBoundReport AlgebraicFlatnessBoundCheck(
    const Lattice& lattice, const CMatrix& a,
    const EuDecomposition& decomposition, int slots);

struct VariationalEstimate {
  double estimate = 0.0;  // integral of |p(y|m') - p(y|m'')|
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  double analytic_bound = 0.0;  // 8 eps_T
  double epsilon = 0.0;
  int64_t samples = 0;
};

// Monte-Carlo estimate of the L1 distance between Eve's output densities for
// two messages, 2 E_{y ~ p'}(1 - p''(y)/p'(y))^+, with both densities evaluated
// exactly as discrete-Gaussian mixtures of Gaussians (coset points within
// exp(-40) of the mode). 95% interval from a 200-replicate bootstrap. Needs a
// square H_e and n_e T <= 2 (kUnsupportedShape).
VariationalEstimate VariationalDistanceProxy(const WiretapEncoder& encoder,
                                             const CMatrix& h_e_square,
                                             double sigma_e, int64_t m1,
                                             int64_t m2, int64_t n_samples,
                                             Rng& rng);

struct EnsembleParams {
  int64_t p = 5;
  int n_a = 1;
  int t = 1;
  int k_b = 1;
  int k_e = 0;
  int codes = 10;
  int trials_per_code = 100;
  double sigma_s = 1.0;
  double sigma_b = 1.0;
  double sigma_e = 1.0;
  std::vector<CMatrix> bob_channels;
  std::vector<CMatrix> eve_channels;
};

struct EnsembleReport {
  std::vector<double> error_rate;  // worst over Bob's grid, per code
  std::vector<double> epsilon;     // worst over Eve's grid, per code
  std::vector<double> max_metric;  // max of the two
  double mean_error_rate = 0.0;
  double mean_epsilon = 0.0;
  double mean_max = 0.0;
  double median_max = 0.0;
  double fraction_above_10x_median = 0.0;
};

// Random nested pairs from the Construction-A ensemble; for each, Monte-Carlo
// error rate and certified flatness factor over the channel grids.
EnsembleReport EnsembleConcentration(const EnsembleParams& params, Rng& rng);

}  // namespace wtl

#endif  // WTL_SECURITY_H_
