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

#include "wtl/security.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wtl/channel.h"
#include "wtl/enumeration.h"
#include "wtl/errors.h"
#include "wtl/gaussian.h"
#include "wtl/stats.h"

namespace wtl {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kE = 2.71828182845904523536;
constexpr double kFactorTol = 1e-9;

double LogSumExp(const std::vector<double>& v) {
  double m = -std::numeric_limits<double>::infinity();
  for (double x : v) m = std::max(m, x);
  if (!std::isfinite(m)) return m;
  double s = 0.0;
  for (double x : v) s += std::exp(x - m);
  return m + std::log(s);
}

// Points of Lambda + c whose squared norm is within `span` * sigma^2 of the
// smallest one.
std::vector<CVector> CosetPoints(const Lattice& lattice, const CVector& c,
                                 double sigma, double span) {
  const ReducedBasis& red = lattice.reduced();
  const RVector u = red.q.transpose() * EmbedVector(c);
  double best = std::numeric_limits<double>::infinity();
  EnumerateBall(red.r, u, best, [&](const IVector&, double d) {
    best = std::min(best, d);
    return best;
  });
  std::vector<CVector> out;
  const double radius_sq = best + span * sigma * sigma;
  const bool complete = EnumerateBall(
      red.r, u, radius_sq,
      [&](const IVector& z, double) {
        out.push_back(lattice.Point(red.unimodular * z) + c);
        return radius_sq;
      },
      2000000);
  if (!complete) {
    Fail(ErrorCode::kTruncation, "coset enumeration exceeded its budget");
  }
  return out;
}

}  // namespace

double LeakageBound(double epsilon, double rate, int n_e, int t) {
  if (!(epsilon >= 0.0)) {
    Fail(ErrorCode::kInvalidArgument, "epsilon must be >= 0");
  }
  if (epsilon == 0.0) return 0.0;
  const double e8 = 8.0 * epsilon;
  if (e8 >= 1.0) return std::numeric_limits<double>::infinity();
  return e8 * n_e * t * rate - e8 * std::log(e8);
}

bool SecrecyVnrHolds(double gamma) { return gamma < kPi; }
bool ReliabilityVnrHolds(double gamma) { return gamma > kPi * kE; }

VnrCheck CheckSecrecy(const Lattice& lattice_e, const CMatrix& h_e_square,
                      double sigma_s, double sigma_e, int t) {
  const int n_a = static_cast<int>(h_e_square.cols());
  if (lattice_e.complex_dim() != n_a * t) {
    Fail(ErrorCode::kShapeError, "lattice dimension must be n_a T");
  }
  const CovarianceBundle bundle = EveCovariances(h_e_square, sigma_s, sigma_e);
  VnrCheck out;
  out.gamma = Vnr(lattice_e.Transformed(PerSlotOperator(h_e_square, t)),
                  SlotCovariance(bundle.sigma3, t));
  const double snr_e = sigma_s * sigma_s / (sigma_e * sigma_e);
  const double c_e = MutualInformation(h_e_square, snr_e);
  out.volume_per_dim = std::pow(lattice_e.volume(), 1.0 / (n_a * t));
  out.volume_threshold = kPi * sigma_s * sigma_s * std::exp(-c_e / n_a);
  out.pass_vnr = SecrecyVnrHolds(out.gamma);
  out.pass_volume = out.volume_per_dim < out.volume_threshold;
  return out;
}

VnrCheck CheckReliability(const Lattice& lattice_b, const CMatrix& h_b,
                          double snr_b, double sigma_b, int t) {
  const int n_a = static_cast<int>(h_b.cols());
  if (lattice_b.complex_dim() != n_a * t) {
    Fail(ErrorCode::kShapeError, "lattice dimension must be n_a T");
  }
  const DecoderState state = MmseGdfe(h_b, snr_b);
  VnrCheck out;
  out.gamma =
      Vnr(lattice_b.Transformed(PerSlotOperator(state.r_b, t)), sigma_b);
  const double power = snr_b * sigma_b * sigma_b;
  const double c_b = MutualInformation(h_b, snr_b);
  out.volume_per_dim = std::pow(lattice_b.volume(), 1.0 / (n_a * t));
  out.volume_threshold = kPi * kE * power * std::exp(-c_b / n_a);
  out.pass_vnr = ReliabilityVnrHolds(out.gamma);
  out.pass_volume = out.volume_per_dim > out.volume_threshold;
  return out;
}

double AchievableRate(double c_b, double c_e, int n_a,
                      std::optional<double> alpha) {
  if (!(c_b >= 0.0) || !(c_e >= 0.0) || n_a <= 0) {
    Fail(ErrorCode::kInvalidArgument, "capacities must be >= 0, n_a > 0");
  }
  double r = c_b - c_e - n_a;
  if (alpha) {
    if (!(*alpha >= 1.0)) Fail(ErrorCode::kInvalidArgument, "alpha must be >= 1");
    r -= 2.0 * n_a * std::log(*alpha);
  }
  return std::max(0.0, r);
}

bool SnrConditionHolds(double snr_b, double snr_e) {
  return (1.0 + snr_b) / (1.0 + snr_e) > kE;
}

EuVerification VerifyEuDecomposition(const CMatrix& a, const EuDecomposition& d,
                                     const Lattice& lattice, int slots) {
  EuVerification out;
  const double scale = std::max(1.0, a.norm());
  if ((a - d.e * d.u).norm() > kFactorTol * scale) {
    out.reason = "A differs from E U";
    return out;
  }
  if (std::abs(std::abs(d.e.determinant()) - 1.0) > kFactorTol ||
      std::abs(std::abs(d.u.determinant()) - 1.0) > kFactorTol) {
    out.reason = "E and U must have unit determinant";
    return out;
  }
  const CMatrix k = PerSlotOperator(d.u, slots);
  const CMatrix k_inv = PerSlotOperator(d.u.inverse(), slots);
  if (k.rows() != lattice.complex_dim()) {
    out.reason = "U does not act on the lattice dimension";
    return out;
  }
  for (Eigen::Index c = 0; c < lattice.complex_generator().cols(); ++c) {
    const CVector g = lattice.complex_generator().col(c);
    for (const CMatrix* m : {&k, &k_inv}) {
      if (!lattice.Contains(*m * g, 1e-7)) {
        out.reason = "U does not preserve the lattice";
        out.counterexample = g;
        return out;
      }
    }
  }
  out.ok = true;
  return out;
}

EuDecomposition EuFromFactors(const CMatrix& a, const CMatrix& e,
                              const CMatrix& u, const Lattice& lattice,
                              int slots) {
  EuDecomposition d{e, u, 0.0};
  const EuVerification v = VerifyEuDecomposition(a, d, lattice, slots);
  if (!v.ok) Fail(ErrorCode::kVerificationFailed, v.reason);
  d.alpha_observed = e.inverse().norm();
  return d;
}

EuDecomposition EuDecompose(const CMatrix& a, const Lattice& lattice, int slots,
                            double diagonal_unit) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    Fail(ErrorCode::kShapeError, "A must be square");
  }
  if (std::abs(std::abs(a.determinant()) - 1.0) > kFactorTol) {
    Fail(ErrorCode::kInvalidArgument, "A must have unit determinant");
  }
  const auto n = a.rows();
  if (n == 1) {
    return EuFromFactors(a, a, CMatrix::Identity(1, 1), lattice, slots);
  }
  const bool diagonal =
      (a - CMatrix(a.diagonal().asDiagonal())).norm() <= kFactorTol * a.norm();
  bool positive = true;
  for (Eigen::Index i = 0; i < n; ++i) {
    positive = positive && a(i, i).real() > 0.0 &&
               std::abs(a(i, i).imag()) <= kFactorTol * a(i, i).real();
  }
  if (n == 2 && diagonal && positive && diagonal_unit > 1.0) {
    const double j = std::round(std::log(a(0, 0).real()) / std::log(diagonal_unit));
    CMatrix u = CMatrix::Zero(2, 2);
    u(0, 0) = std::pow(diagonal_unit, j);
    u(1, 1) = std::pow(diagonal_unit, -j);
    const CMatrix e = a * u.inverse();
    return EuFromFactors(a, e, u, lattice, slots);
  }
  Fail(ErrorCode::kUnsupportedShape,
       "no built-in EU decomposition for this A; supply the factors");
}

AlgebraicBoundReport AlgebraicFlatnessBoundCheck(
    const Lattice& lattice, const CMatrix& a,
    const EuDecomposition& decomposition, int slots) {
  const int n_a = static_cast<int>(a.rows());
  AlgebraicBoundReport out;
  out.alpha_observed = decomposition.alpha_observed;
  out.lhs = FlatnessFactor(lattice, SlotCovariance(a, slots)).epsilon;
  const double det = std::abs(a.determinant());
  const double sigma =
      std::pow(det, 1.0 / (2.0 * n_a)) / decomposition.alpha_observed;
  out.rhs = FlatnessFactor(lattice, sigma).epsilon;
  out.slack = out.rhs - out.lhs;
  return out;
}

VariationalEstimate VariationalDistanceProxy(const WiretapEncoder& encoder,
                                             const CMatrix& h_e_square,
                                             double sigma_e, int64_t m1,
                                             int64_t m2, int64_t n_samples,
                                             Rng& rng) {
  const NestedPair& pair = encoder.pair();
  if (h_e_square.rows() != pair.n_a || h_e_square.cols() != pair.n_a) {
    Fail(ErrorCode::kShapeError, "Eve's channel must be n_a x n_a");
  }
  if (pair.complex_dim() > 2) {
    Fail(ErrorCode::kUnsupportedShape,
         "variational estimate needs n_e T <= 2");
  }
  const double sigma_s = encoder.sigma_s();
  const CMatrix k = PerSlotOperator(h_e_square, pair.t);
  VariationalEstimate out;
  out.samples = n_samples;
  out.epsilon =
      FlatnessFactor(pair.lattice_e,
                     SlotCovariance(EveCovariances(h_e_square, sigma_s, sigma_e)
                                        .sigma,
                                    pair.t))
          .epsilon;
  out.analytic_bound = 8.0 * out.epsilon;

  struct Mixture {
    std::vector<CVector> means;
    std::vector<double> log_weights;
  };
  auto build = [&](int64_t m) {
    Mixture mix;
    for (const CVector& x :
         CosetPoints(pair.lattice_e, CosetEncode(m, pair), sigma_s, 40.0)) {
      mix.means.push_back(k * x);
      mix.log_weights.push_back(-x.squaredNorm() / (sigma_s * sigma_s));
    }
    const double z = LogSumExp(mix.log_weights);
    for (double& w : mix.log_weights) w -= z;
    return mix;
  };
  const Mixture p1 = build(m1);
  const Mixture p2 = build(m2);
  auto log_density = [&](const Mixture& mix, const CVector& y) {
    std::vector<double> terms(mix.means.size());
    for (size_t i = 0; i < mix.means.size(); ++i) {
      terms[i] = mix.log_weights[i] -
                 (y - mix.means[i]).squaredNorm() / (sigma_e * sigma_e);
    }
    return LogSumExp(terms);
  };
  std::vector<double> values;
  values.reserve(n_samples);
  const double s = sigma_e / std::sqrt(2.0);
  for (int64_t i = 0; i < n_samples; ++i) {
    CVector y = k * Vectorize(encoder.Encode(m1, rng));
    for (Eigen::Index j = 0; j < y.size(); ++j) {
      const double re = rng.Normal();
      const double im = rng.Normal();
      y(j) += Complex(s * re, s * im);
    }
    const double lr = log_density(p2, y) - log_density(p1, y);
    values.push_back(2.0 * std::max(0.0, 1.0 - std::exp(lr)));
  }
  out.estimate = Mean(values);
  const double se = BootstrapStdError(values, Mean, 200, rng);
  out.ci_lo = std::max(0.0, out.estimate - 1.96 * se);
  out.ci_hi = out.estimate + 1.96 * se;
  return out;
}

EnsembleReport EnsembleConcentration(const EnsembleParams& params, Rng& rng) {
  if (params.codes <= 0 || params.trials_per_code <= 0) {
    Fail(ErrorCode::kInvalidArgument, "codes and trials must be positive");
  }
  EnsembleReport out;
  const double snr_b =
      params.sigma_s * params.sigma_s / (params.sigma_b * params.sigma_b);
  for (int c = 0; c < params.codes; ++c) {
    const NestedPair pair = SampleNestedPair(params.p, params.n_a, params.t,
                                             params.k_b, params.k_e, rng);
    const WiretapEncoder encoder(pair, params.sigma_s);
    double worst_err = 0.0;
    for (const CMatrix& h_b : params.bob_channels) {
      const WiretapDecoder decoder(pair, MmseGdfe(h_b, snr_b));
      int errors = 0;
      for (int i = 0; i < params.trials_per_code; ++i) {
        const int64_t m = static_cast<int64_t>(
            rng.UniformInt(static_cast<uint64_t>(pair.num_messages())));
        const CMatrix y =
            ApplyChannel(encoder.Encode(m, rng), h_b, params.sigma_b, rng);
        if (decoder.Decode(y) != m) ++errors;
      }
      worst_err = std::max(
          worst_err, static_cast<double>(errors) / params.trials_per_code);
    }
    double worst_eps = 0.0;
    for (const CMatrix& h_e : params.eve_channels) {
      const CMatrix sigma =
          EveEffectiveCovariance(h_e, params.sigma_s, params.sigma_e);
      worst_eps = std::max(
          worst_eps,
          FlatnessFactor(pair.lattice_e, SlotCovariance(sigma, params.t))
              .epsilon);
    }
    out.error_rate.push_back(worst_err);
    out.epsilon.push_back(worst_eps);
    out.max_metric.push_back(std::max(worst_err, worst_eps));
  }
  out.mean_error_rate = Mean(out.error_rate);
  out.mean_epsilon = Mean(out.epsilon);
  out.mean_max = Mean(out.max_metric);
  std::vector<double> sorted = out.max_metric;
  std::sort(sorted.begin(), sorted.end());
  const size_t n = sorted.size();
  out.median_max = n % 2 == 1 ? sorted[n / 2]
                              : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  int64_t above = 0;
  for (double v : sorted) above += v > 10.0 * out.median_max ? 1 : 0;
  out.fraction_above_10x_median = static_cast<double>(above) / n;
  return out;
}

}  // namespace wtl
