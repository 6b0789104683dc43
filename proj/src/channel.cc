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

#include "wtl/channel.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wtl/errors.h"

namespace wtl {
namespace {

constexpr double kMaxConditionNumber = 1e12;

CMatrix Hermitize(const CMatrix& a) { return 0.5 * (a + a.adjoint()); }

double MinHermitianEigenvalue(const CMatrix& a) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(Hermitize(a),
                                            Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

void CheckFullRank(const CMatrix& h) {
  Eigen::JacobiSVD<CMatrix> svd(h);
  const RVector& s = svd.singularValues();
  if (s.size() == 0 || !(s(s.size() - 1) > kLinearAlgebraTol * s(0))) {
    Fail(ErrorCode::kRankDeficient, "channel matrix is rank deficient");
  }
}

}  // namespace

void CompoundSet::Validate() const {
  if (n_a <= 0 || n_b <= 0 || n_e <= 0) {
    Fail(ErrorCode::kInvalidArgument, "antenna counts must be positive");
  }
  if (!(power > 0.0) || !(sigma_b > 0.0) || !(sigma_e > 0.0)) {
    Fail(ErrorCode::kInvalidArgument, "power and noise levels must be > 0");
  }
  if (!(c_b >= 0.0) || !(c_e >= 0.0)) {
    Fail(ErrorCode::kInvalidArgument, "capacities must be >= 0");
  }
}

double MutualInformation(const CMatrix& h, double snr) {
  const auto n = h.cols();
  const CMatrix m = CMatrix::Identity(n, n) + snr * (h.adjoint() * h);
  Eigen::LLT<CMatrix> llt(Hermitize(m));
  double s = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    s += 2.0 * std::log(llt.matrixL()(k, k).real());
  }
  return s;
}

CMatrix SampleOnShell(int n_rx, int n_a, double snr, double capacity,
                      Rng& rng) {
  if (!(capacity >= 0.0)) {
    Fail(ErrorCode::kInvalidArgument, "capacity must be >= 0");
  }
  if (n_rx <= 0 || n_a <= 0 || !(snr > 0.0)) {
    Fail(ErrorCode::kInvalidArgument, "need positive dimensions and snr");
  }
  const int m = std::min(n_rx, n_a);
  std::vector<double> w(m);
  double total = 0.0;
  for (double& v : w) {
    v = -std::log(1.0 - rng.Uniform01());
    total += v;
  }
  const CMatrix u = HaarUnitary(n_rx, rng);
  const CMatrix v = HaarUnitary(n_a, rng);
  CMatrix h = CMatrix::Zero(n_rx, n_a);
  for (int i = 0; i < m; ++i) {
    const double log_factor = capacity * w[i] / total;
    const double s = std::sqrt(std::expm1(log_factor) / snr);
    h += s * u.col(i) * v.col(i).adjoint();
  }
  return h;
}

CMatrix IsotropicOnShell(int n_rx, int n_a, double snr, double capacity) {
  if (!(capacity >= 0.0)) {
    Fail(ErrorCode::kInvalidArgument, "capacity must be >= 0");
  }
  const int m = std::min(n_rx, n_a);
  const double alpha = std::expm1(capacity / m) / snr;
  CMatrix h = CMatrix::Zero(n_rx, n_a);
  for (int i = 0; i < m; ++i) h(i, i) = std::sqrt(alpha);
  return h;
}

CMatrix ApplyChannel(const CMatrix& x, const CMatrix& h, double sigma,
                     Rng& rng) {
  if (h.cols() != x.rows()) {
    Fail(ErrorCode::kShapeError, "channel columns must match transmit rows");
  }
  CMatrix y = h * x;
  const double s = sigma / std::sqrt(2.0);
  for (Eigen::Index c = 0; c < y.cols(); ++c) {
    for (Eigen::Index r = 0; r < y.rows(); ++r) {
      const double re = rng.Normal();
      const double im = rng.Normal();
      y(r, c) += Complex(s * re, s * im);
    }
  }
  return y;
}

CMatrix ReduceAntennaMismatch(const CMatrix& h_e, double beta) {
  const auto n_e = h_e.rows();
  const auto n_a = h_e.cols();
  if (n_e == n_a) return h_e;
  CheckFullRank(h_e);
  if (n_e < n_a) {
    if (!(beta > 0.0)) {
      Fail(ErrorCode::kInvalidArgument, "completion needs beta > 0");
    }
    Eigen::HouseholderQR<CMatrix> qr(h_e.adjoint());
    const CMatrix q = qr.householderQ() * CMatrix::Identity(n_a, n_a);
    CMatrix out(n_a, n_a);
    out.topRows(n_e) = h_e;
    out.bottomRows(n_a - n_e) = beta * q.rightCols(n_a - n_e).adjoint();
    return out;
  }
  Eigen::HouseholderQR<CMatrix> qr(h_e);
  return qr.matrixQR().topRows(n_a).triangularView<Eigen::Upper>();
}

CovarianceBundle EveCovariances(const CMatrix& h, double sigma_s,
                                double sigma_e) {
  if (h.rows() != h.cols()) {
    Fail(ErrorCode::kShapeError,
         "Eve's channel must be square; reduce the antenna mismatch first");
  }
  if (!(sigma_s > 0.0) || !(sigma_e > 0.0)) {
    Fail(ErrorCode::kInvalidArgument, "sigma_s and sigma_e must be > 0");
  }
  if (!(ConditionNumber(h) <= kMaxConditionNumber)) {
    Fail(ErrorCode::kSingularChannel, "Eve's channel is numerically singular");
  }
  const auto n = h.rows();
  const CMatrix eye = CMatrix::Identity(n, n);
  const CMatrix hh = h * h.adjoint();
  const double vs = sigma_s * sigma_s, ve = sigma_e * sigma_e;
  CovarianceBundle out;
  out.sigma0 = Hermitize(vs * hh + ve * eye);
  const CMatrix sigma3_inv = hh.inverse() / vs + eye / ve;
  out.sigma3 = Hermitize(sigma3_inv.inverse());
  out.sigma = Hermitize((h.adjoint() * sigma3_inv * h).inverse());
  return out;
}

CMatrix EveEffectiveCovariance(const CMatrix& h_e, double sigma_s,
                               double sigma_e) {
  const auto n = h_e.cols();
  const CMatrix inv = CMatrix::Identity(n, n) / (sigma_s * sigma_s) +
                      h_e.adjoint() * h_e / (sigma_e * sigma_e);
  return Hermitize(inv.inverse());
}

CovarianceSpec SlotCovariance(const CMatrix& sigma, int slots) {
  return CovarianceSpec::FromHermitian(
      Kron(sigma, CMatrix::Identity(slots, slots)));
}

double PerturbationFactor(const CMatrix& sigma, double delta) {
  const auto n = sigma.rows();
  const Complex num = sigma.determinant();
  const Complex den = (sigma - delta * CMatrix::Identity(n, n)).determinant();
  return num.real() / den.real();
}

double SpectralDistance(const CMatrix& a, const CMatrix& b) {
  const CMatrix d = a - b;
  if (d.rows() == 1) return std::abs(d(0, 0).real());
  if (d.rows() == 2) {
    const double p = d(0, 0).real(), q = d(1, 1).real();
    const double mean = 0.5 * (p + q);
    const double radius =
        std::sqrt(0.25 * (p - q) * (p - q) + std::norm(0.5 * (d(0, 1) + std::conj(d(1, 0)))));
    return std::abs(mean) + radius;
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(Hermitize(d),
                                            Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

CMatrix SampleEveCovariance(const CompoundSet& set, ChannelRegion region,
                            Rng& rng) {
  double capacity = set.c_e;
  if (region == ChannelRegion::kBall) capacity *= rng.Uniform01();
  const CMatrix h = SampleOnShell(set.n_e, set.n_a, set.snr_e(), capacity, rng);
  return EveEffectiveCovariance(h, std::sqrt(set.power), set.sigma_e);
}

int NearestCenter(const ChannelCovering& covering, const CMatrix& sigma) {
  int best = -1;
  double best_dist = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < covering.centers.size(); ++i) {
    const double d = SpectralDistance(covering.centers[i], sigma);
    if (d < best_dist) {
      best_dist = d;
      best = static_cast<int>(i);
    }
  }
  return best;
}

ChannelCovering QuantizeChannelSpace(const CompoundSet& set, double delta,
                                     ChannelRegion region, Rng& rng,
                                     int build_probes, int validation_probes) {
  set.Validate();
  if (!(delta > 0.0)) Fail(ErrorCode::kInvalidArgument, "delta must be > 0");
  ChannelCovering out;
  out.delta = delta;
  const double sigma_s = std::sqrt(set.power);

  if (set.n_a == 1 && region == ChannelRegion::kBall) {
    const double gain = std::expm1(set.c_e) / set.snr_e();
    const double hi = sigma_s * sigma_s;
    const double lo = 1.0 / (1.0 / hi + gain / (set.sigma_e * set.sigma_e));
    const int64_t count =
        std::max<int64_t>(1, static_cast<int64_t>(std::ceil((hi - lo) / (2.0 * delta))));
    for (int64_t i = 0; i < count; ++i) {
      CMatrix c(1, 1);
      c(0, 0) = std::min(hi, lo + delta * (2.0 * i + 1.0));
      out.centers.push_back(c);
    }
  } else {
    std::vector<CMatrix> probes;
    probes.reserve(build_probes);
    for (int i = 0; i < build_probes; ++i) {
      probes.push_back(SampleEveCovariance(set, region, rng));
    }
    std::vector<double> gap(probes.size(),
                            std::numeric_limits<double>::infinity());
    size_t next = 0;
    while (!probes.empty()) {
      const CMatrix center = probes[next];
      out.centers.push_back(center);
      double worst = 0.0;
      for (size_t i = 0; i < probes.size(); ++i) {
        gap[i] = std::min(gap[i], SpectralDistance(probes[i], center));
        if (gap[i] > worst) {
          worst = gap[i];
          next = i;
        }
      }
      if (worst <= 0.5 * delta) break;
    }
  }

  for (int round = 0; round < 5; ++round) {
    double worst = 0.0;
    std::vector<CMatrix> misses;
    for (int i = 0; i < validation_probes; ++i) {
      const CMatrix s = SampleEveCovariance(set, region, rng);
      double d = std::numeric_limits<double>::infinity();
      for (const CMatrix& c : out.centers) d = std::min(d, SpectralDistance(c, s));
      worst = std::max(worst, d);
      if (d > delta) misses.push_back(s);
    }
    out.max_validated_gap = worst;
    out.validation_probes = validation_probes;
    if (misses.empty()) break;
    out.centers.insert(out.centers.end(), misses.begin(), misses.end());
  }

  for (const CMatrix& c : out.centers) {
    if (!(MinHermitianEigenvalue(c) > delta)) {
      throw Error(ErrorCode::kDeltaTooLarge,
                  "Sigma - delta I is not positive definite for delta = " +
                      std::to_string(delta));
    }
  }
  return out;
}

}  // namespace wtl
