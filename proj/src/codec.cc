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

#include "wtl/codec.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "wtl/errors.h"
#include "wtl/gaussian.h"
#include "wtl/stats.h"

namespace wtl {

WiretapEncoder::WiretapEncoder(NestedPair pair, double sigma_s)
    : pair_(std::move(pair)),
      sigma_s_(sigma_s),
      sampler_(pair_.lattice_e,
               CovarianceSpec::Spherical(pair_.complex_dim(), sigma_s)) {}

CMatrix WiretapEncoder::Encode(int64_t m, Rng& rng) const {
  const CVector coset = CosetEncode(m, pair_);
  return MatrixForm(sampler_.Sample(coset, rng).coords, pair_.n_a, pair_.t);
}

DecoderState MmseGdfe(const CMatrix& h_b, double snr_b) {
  if (!(snr_b > 0.0)) Fail(ErrorCode::kInvalidArgument, "snr must be > 0");
  const auto n = h_b.cols();
  const CMatrix m =
      h_b.adjoint() * h_b + CMatrix::Identity(n, n) / snr_b;
  Eigen::LLT<CMatrix> llt(0.5 * (m + m.adjoint()));
  DecoderState state;
  state.snr_b = snr_b;
  const CMatrix l = llt.matrixL();
  state.r_b = l.adjoint();
  state.f_b = l.triangularView<Eigen::Lower>().solve(h_b.adjoint());
  return state;
}

std::optional<std::vector<LinearCode>> SlotComponents(const LinearCode& code,
                                                      int n_a, int t) {
  if (code.length != 2 * n_a * t) {
    Fail(ErrorCode::kShapeError, "code length must be 2 n_a T");
  }
  std::vector<LinearCode> parts;
  int total = 0;
  for (int s = 0; s < t; ++s) {
    std::vector<int> own, rest;
    std::vector<bool> mine(code.length, false);
    for (int r = 0; r < n_a; ++r) {
      const int j = r * t + s;
      mine[2 * j] = mine[2 * j + 1] = true;
    }
    for (int c = 0; c < code.length; ++c) (mine[c] ? own : rest).push_back(c);
    IMatrix outside(code.dim, rest.size());
    IMatrix inside(code.dim, own.size());
    for (int r = 0; r < code.dim; ++r) {
      for (size_t c = 0; c < rest.size(); ++c) outside(r, c) = code.generator(r, rest[c]);
      for (size_t c = 0; c < own.size(); ++c) inside(r, c) = code.generator(r, own[c]);
    }
    // Codewords vanishing outside slot s: x G with x in the left kernel of
    // the outside columns.
    const IMatrix kernel = NullSpaceModP(outside.transpose(), code.p);
    const LinearCode part = CanonicalCode(code.p, kernel * inside);
    total += part.dim;
    parts.push_back(part);
  }
  if (total != code.dim) return std::nullopt;
  return parts;
}

WiretapDecoder::WiretapDecoder(const NestedPair& pair,
                               const DecoderState& state)
    : pair_(pair), state_(state) {
  if (state.r_b.rows() != pair.n_a) {
    Fail(ErrorCode::kShapeError, "decoder state does not match n_a");
  }
  if (pair.t > 1) {
    if (auto parts = SlotComponents(pair.code_b, pair.n_a, pair.t)) {
      for (const LinearCode& part : *parts) {
        slot_lattices_.push_back(LiftCode(part, pair.n_a));
        slot_search_.push_back(slot_lattices_.back().Transformed(state.r_b));
      }
      return;
    }
  }
  full_lattice_ =
      pair.lattice_b.Transformed(PerSlotOperator(state.r_b, pair.t));
}

CVector WiretapDecoder::DecodeLatticePoint(const CMatrix& y_b) const {
  if (y_b.cols() != pair_.t || y_b.rows() != state_.f_b.cols()) {
    Fail(ErrorCode::kShapeError, "received block has the wrong shape");
  }
  const CMatrix filtered = state_.f_b * y_b;
  if (full_lattice_) {
    const LatticePoint p = ClosestPoint(Vectorize(filtered), *full_lattice_);
    return pair_.lattice_b.Point(p.coeffs);
  }
  CMatrix x(pair_.n_a, pair_.t);
  for (int s = 0; s < pair_.t; ++s) {
    const LatticePoint p = ClosestPoint(filtered.col(s), slot_search_[s]);
    x.col(s) = slot_lattices_[s].Point(p.coeffs);
  }
  return Vectorize(x);
}

int64_t WiretapDecoder::Decode(const CMatrix& y_b) const {
  return CosetDecode(DecodeLatticePoint(y_b), pair_);
}

SubgaussianReport SubgaussianCheck(const WiretapEncoder& encoder,
                                   const CMatrix& h_b, int64_t n_samples,
                                   int pairs, double exponent, Rng& rng) {
  const NestedPair& pair = encoder.pair();
  const int n = pair.complex_dim();
  const int nb = static_cast<int>(h_b.rows()) * pair.t;
  SubgaussianReport out;
  out.epsilon_prime = FlatnessFactor(pair.lattice_e, encoder.sigma_s()).epsilon;
  out.pairs = pairs;
  out.samples = n_samples;
  if (out.epsilon_prime >= 1.0) {
    Fail(ErrorCode::kPreconditionViolated, "flatness factor must be < 1");
  }
  std::vector<CVector> xs;
  xs.reserve(n_samples);
  for (int64_t i = 0; i < n_samples; ++i) {
    const int64_t m =
        static_cast<int64_t>(rng.UniformInt(static_cast<uint64_t>(pair.num_messages())));
    xs.push_back(Vectorize(encoder.Encode(m, rng)));
  }
  const double factor = (1.0 + out.epsilon_prime) / (1.0 - out.epsilon_prime);
  const double s2 = encoder.sigma_s() * encoder.sigma_s();
  const CMatrix per_slot_h = PerSlotOperator(h_b, pair.t).adjoint();
  for (int k = 0; k < pairs; ++k) {
    const CMatrix a = (k % 2 == 0) ? per_slot_h
                                   : ComplexGaussianMatrix(n, nb, 1.0, rng);
    CVector u(nb);
    for (int i = 0; i < nb; ++i) u(i) = Complex(rng.Normal(), rng.Normal());
    CVector v = a * u;
    if (v.norm() == 0.0) continue;
    v *= std::sqrt(4.0 * exponent / s2) / v.norm();
    std::vector<double> values;
    values.reserve(xs.size());
    for (const CVector& x : xs) values.push_back(std::exp(x.dot(v).real()));
    const double mean = Mean(values);
    const double se = std::sqrt(Variance(values) / std::max<size_t>(1, values.size()));
    const double bound = factor * std::exp(exponent);
    const double ratio = mean / bound;
    out.max_ratio = std::max(out.max_ratio, ratio);
    if (ratio > 1.0 + 3.0 * se / bound) ++out.violations;
  }
  return out;
}

}  // namespace wtl
