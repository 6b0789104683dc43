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

#ifndef WTL_CODEC_H_
#define WTL_CODEC_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "wtl/construction_a.h"
#include "wtl/lattice.h"
#include "wtl/rng.h"
#include "wtl/sampler.h"

namespace wtl {

// Transmitter: message m selects the coset Lambda_e + phi(m), and the
// codeword is a discrete Gaussian sample of parameter sigma_s from that coset,
// returned in n_a x T matrix form.
class WiretapEncoder {
 public:
  WiretapEncoder(NestedPair pair, double sigma_s);

  CMatrix Encode(int64_t m, Rng& rng) const;

  const NestedPair& pair() const { return pair_; }
  double sigma_s() const { return sigma_s_; }
  const LatticeGaussianSampler& sampler() const { return sampler_; }

 private:
  NestedPair pair_;
  double sigma_s_;
  LatticeGaussianSampler sampler_;
};

// MMSE-GDFE front end: R_b upper triangular with
// R_b^H R_b = H_b^H H_b + snr^{-1} I and F_b = R_b^{-H} H_b^H, so that
// F_b Y_b = R_b X + W_eff with effective-noise covariance sigma_b^2 I when
// the signal power is P = snr sigma_b^2.
struct DecoderState {
  CMatrix f_b;  // n_a x n_b
  CMatrix r_b;  // n_a x n_a
  double snr_b = 0.0;
};

DecoderState MmseGdfe(const CMatrix& h_b, double snr_b);

// Bob's receiver. Lattice decoding of F_b Y_b in (R_b per slot) Lambda_b,
// then phi^{-1} of the recovered Lambda_b point. When C_b is a direct sum of
// codes supported on single time slots the search runs slot by slot;
// otherwise one closest-point search covers all n_a T complex dimensions.
class WiretapDecoder {
 public:
  WiretapDecoder(const NestedPair& pair, const DecoderState& state);

  int64_t Decode(const CMatrix& y_b) const;
  // The Lambda_b point (n_a T vector) selected for y_b.
  CVector DecodeLatticePoint(const CMatrix& y_b) const;

  bool per_slot() const { return !slot_lattices_.empty(); }
  const DecoderState& state() const { return state_; }

 private:
  NestedPair pair_;
  DecoderState state_;
  std::optional<Lattice> full_lattice_;
  std::vector<Lattice> slot_lattices_;  // Lambda_s, complex dim n_a
  std::vector<Lattice> slot_search_;    // R_b Lambda_s
};

// Codes of length 2 n_a whose direct sum over the T slots is `code`, or
// nothing if the code does not split that way. Slot c owns the complex
// coordinates r T + c, r = 0 .. n_a - 1.
std::optional<std::vector<LinearCode>> SlotComponents(const LinearCode& code,
                                                      int n_a, int t);

struct SubgaussianReport {
  double epsilon_prime = 0.0;
  int pairs = 0;
  int violations = 0;
  // Largest empirical E[exp(Re x^H A u)] divided by the lemma's bound.
  double max_ratio = 0.0;
  int64_t samples = 0;
};

// Checks E[exp(Re{x^H A u})] <= ((1 + e') / (1 - e')) exp(sigma_s^2 |A u|^2 / 4)
// for x ~ D_{Lambda_e + phi(m), sigma_s} with random m, over `pairs` random
// (A, u). Half of the A are per-slot H_b^H, half i.i.d. Gaussian; u is scaled
// so that the bound's exponent equals `exponent`. One sample set is shared by
// all pairs. A pair violates the bound when its ratio exceeds 1 by more than
// three standard errors.
SubgaussianReport SubgaussianCheck(const WiretapEncoder& encoder,
                                   const CMatrix& h_b, int64_t n_samples,
                                   int pairs, double exponent, Rng& rng);

}  // namespace wtl

#endif  // WTL_CODEC_H_
