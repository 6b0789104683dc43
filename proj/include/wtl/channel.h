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

#ifndef WTL_CHANNEL_H_
#define WTL_CHANNEL_H_

#include <cstdint>
#include <vector>

#include "wtl/gaussian.h"
#include "wtl/linalg.h"
#include "wtl/rng.h"

namespace wtl {

// Compound MIMO wiretap set: every Bob channel has |I + rho_b H^H H| = e^{C_b}
// and every Eve channel |I + rho_e H^H H| = e^{C_e}.
struct CompoundSet {
  int n_a = 1;
  int n_b = 1;
  int n_e = 1;
  double power = 1.0;
  double sigma_b = 1.0;
  double sigma_e = 1.0;
  double c_b = 0.0;
  double c_e = 0.0;

  double snr_b() const { return power / (sigma_b * sigma_b); }
  double snr_e() const { return power / (sigma_e * sigma_e); }
  // Throws kInvalidArgument on non-positive counts, noise or power, or
  // negative capacities.
  void Validate() const;
};

struct ChannelState {
  CMatrix h_b;  // n_b x n_a
  CMatrix h_e;  // n_e x n_a
};

// ln |I + snr H^H H|.
double MutualInformation(const CMatrix& h, double snr);

// Channel on the shell |I + snr H^H H| = e^C. The m = min(n_rx, n_a)
// log-factors ln(1 + snr lambda_i) form a uniform point of the simplex
// scaled to C; singular vectors are Haar distributed.
CMatrix SampleOnShell(int n_rx, int n_a, double snr, double capacity, Rng& rng);

// The isotropic shell point [sqrt(alpha) I; 0] (or [sqrt(alpha) I, 0] when
// n_rx < n_a) with alpha = (e^{C/m} - 1) / snr.
CMatrix IsotropicOnShell(int n_rx, int n_a, double snr, double capacity);

// Y = H X + W, W i.i.d. circularly-symmetric with variance sigma^2 per
// complex entry.
CMatrix ApplyChannel(const CMatrix& x, const CMatrix& h, double sigma,
                     Rng& rng);

// Square n_a x n_a surrogate for Eve's channel. n_e == n_a: H itself.
// n_e < n_a: [H; beta H~] with the rows of H~ an orthonormal basis of the
// orthogonal complement of the row space of H. n_e > n_a: R^ from
// H = Q [R^; 0]. Throws kRankDeficient if H lacks full rank.
CMatrix ReduceAntennaMismatch(const CMatrix& h_e, double beta);

struct CovarianceBundle {
  CMatrix sigma0;  // sigma_s^2 H H^H + sigma_e^2 I
  CMatrix sigma3;  // ((H H^H)^{-1} sigma_s^{-2} + sigma_e^{-2} I)^{-1}
  CMatrix sigma;   // (H^H Sigma3^{-1} H)^{-1}
};

// Requires a square H; throws kSingularChannel if its condition number
// exceeds 1e12.
CovarianceBundle EveCovariances(const CMatrix& h_e_square, double sigma_s,
                                double sigma_e);

// Sigma = (sigma_s^{-2} I + sigma_e^{-2} H^H H)^{-1} for any n_e x n_a H;
// equals EveCovariances(...).sigma for square invertible H.
CMatrix EveEffectiveCovariance(const CMatrix& h_e, double sigma_s,
                               double sigma_e);

// Covariance of T independent uses of an n x n covariance under row-major
// vectorization: kron(Sigma, I_T).
CovarianceSpec SlotCovariance(const CMatrix& sigma, int slots);

// f(delta) = |Sigma| / |Sigma - delta I|.
double PerturbationFactor(const CMatrix& sigma, double delta);

enum class ChannelRegion {
  kShell,  // |I + rho_e H^H H| = e^{C_e}
  kBall,   // |I + rho_e H^H H| <= e^{C_e}
};

struct ChannelCovering {
  double delta = 0.0;
  std::vector<CMatrix> centers;
  // Largest spectral distance from a validation probe to its nearest center.
  double max_validated_gap = 0.0;
  int64_t validation_probes = 0;
};

// Draws one of Eve's effective covariances from the region.
CMatrix SampleEveCovariance(const CompoundSet& set, ChannelRegion region,
                            Rng& rng);

// Finite delta-covering of Eve's effective covariances in spectral norm.
// Centers are chosen by farthest-point sampling at radius delta/2 over
// `build_probes` Monte-Carlo draws; `validation_probes` fresh draws then
// measure the achieved gap, and any probe farther than delta becomes a new
// center (at most five rounds). For n_a = 1 in ball mode the covering is the
// exact interval covering with ceil(L / (2 delta)) centers. Throws
// kDeltaTooLarge if some center has Sigma - delta I not positive definite.
ChannelCovering QuantizeChannelSpace(const CompoundSet& set, double delta,
                                     ChannelRegion region, Rng& rng,
                                     int build_probes = 20000,
                                     int validation_probes = 10000);

// Index of the center closest to sigma in spectral norm.
int NearestCenter(const ChannelCovering& covering, const CMatrix& sigma);

double SpectralDistance(const CMatrix& a, const CMatrix& b);

}  // namespace wtl

#endif  // WTL_CHANNEL_H_
