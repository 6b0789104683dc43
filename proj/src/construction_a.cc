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

#include "wtl/construction_a.h"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "wtl/enumeration.h"
#include "wtl/errors.h"
#include "wtl/stats.h"

namespace wtl {
namespace {

constexpr double kPi = 3.14159265358979323846;

int64_t Mod(int64_t a, int64_t p) {
  const int64_t r = a % p;
  return r < 0 ? r + p : r;
}

int64_t InverseMod(int64_t a, int64_t p) {
  int64_t t = 0, new_t = 1, r = p, new_r = Mod(a, p);
  while (new_r != 0) {
    const int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_tuple(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_tuple(new_r, r - q * new_r);
  }
  return Mod(t, p);
}

CVector CodeVectorToComplex(const IVector& v) {
  const auto n = v.size() / 2;
  CVector x(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    x(j) = Complex(static_cast<double>(v(2 * j)),
                   static_cast<double>(v(2 * j + 1)));
  }
  return x;
}

}  // namespace

bool IsPrime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

LinearCode CanonicalCode(int64_t p, const IMatrix& generator) {
  if (!IsPrime(p)) {
    Fail(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
  }
  IMatrix g = generator.unaryExpr([p](int64_t v) { return Mod(v, p); });
  const int rows = static_cast<int>(g.rows());
  const int cols = static_cast<int>(g.cols());
  std::vector<int> pivots;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (g(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    g.row(pivot).swap(g.row(rank));
    const int64_t inv = InverseMod(g(rank, c), p);
    for (int j = 0; j < cols; ++j) g(rank, j) = Mod(g(rank, j) * inv, p);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || g(r, c) == 0) continue;
      const int64_t f = g(r, c);
      for (int j = 0; j < cols; ++j) g(r, j) = Mod(g(r, j) - f * g(rank, j), p);
    }
    pivots.push_back(c);
    ++rank;
  }
  LinearCode code;
  code.p = p;
  code.length = cols;
  code.dim = rank;
  code.generator = g.topRows(rank);
  code.pivots = std::move(pivots);
  return code;
}

IMatrix NullSpaceModP(const IMatrix& a, int64_t p) {
  const LinearCode rref = CanonicalCode(p, a);
  const int n = static_cast<int>(a.cols());
  std::vector<bool> is_pivot(n, false);
  for (int c : rref.pivots) is_pivot[c] = true;
  IMatrix basis(n - rref.dim, n);
  int row = 0;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    basis.row(row).setZero();
    basis(row, f) = 1;
    for (int i = 0; i < rref.dim; ++i) {
      basis(row, rref.pivots[i]) = Mod(-rref.generator(i, f), p);
    }
    ++row;
  }
  return basis;
}

LinearCode SampleRandomCode(int64_t p, int length, int dim, Rng& rng) {
  if (!IsPrime(p)) {
    Fail(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
  }
  if (length < 0 || dim < 0 || dim > length) {
    Fail(ErrorCode::kInvalidArgument, "code dimension must be in [0, length]");
  }
  while (true) {
    IMatrix g(dim, length);
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < length; ++c) {
        g(r, c) = static_cast<int64_t>(rng.UniformInt(static_cast<uint64_t>(p)));
      }
    }
    LinearCode code = CanonicalCode(p, g);
    if (code.dim == dim) return code;
  }
}

IVector ReductionMap(const CVector& x, int64_t p) {
  IVector v(2 * x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    const double re = std::round(x(j).real());
    const double im = std::round(x(j).imag());
    if (std::abs(re - x(j).real()) > kMembershipTol ||
        std::abs(im - x(j).imag()) > kMembershipTol) {
      Fail(ErrorCode::kInvalidArgument, "vector is not in Z[i]^N");
    }
    v(2 * j) = Mod(static_cast<int64_t>(re), p);
    v(2 * j + 1) = Mod(static_cast<int64_t>(im), p);
  }
  return v;
}

Lattice LiftCode(const LinearCode& code, int complex_dim) {
  if (complex_dim <= 0 || code.length != 2 * complex_dim) {
    Fail(ErrorCode::kShapeError,
         "code length " + std::to_string(code.length) + " is not 2 x " +
             std::to_string(complex_dim));
  }
  const int n = complex_dim;
  CMatrix b(n, 2 * n);
  int col = 0;
  for (int r = 0; r < code.dim; ++r) {
    b.col(col++) = CodeVectorToComplex(code.generator.row(r).transpose());
  }
  std::vector<bool> is_pivot(code.length, false);
  for (int c : code.pivots) is_pivot[c] = true;
  for (int c = 0; c < code.length; ++c) {
    if (is_pivot[c]) continue;
    IVector e = IVector::Zero(code.length);
    e(c) = code.p;
    b.col(col++) = CodeVectorToComplex(e);
  }
  return Lattice::FromComplexGenerator(b);
}

int64_t NestedPair::num_messages() const {
  int64_t m = 1;
  for (int i = k_e(); i < k_b(); ++i) m *= p;
  return m;
}

NestedPair MakeNestedPair(int64_t p, const IMatrix& generator, int k_e, int n_a,
                          int t) {
  if (n_a <= 0 || t <= 0) {
    Fail(ErrorCode::kInvalidArgument, "n_a and T must be positive");
  }
  const int k_b = static_cast<int>(generator.rows());
  if (generator.cols() != 2 * n_a * t) {
    Fail(ErrorCode::kShapeError, "code length must be 2 n_a T");
  }
  if (k_e < 0 || k_e > k_b) {
    Fail(ErrorCode::kInvalidArgument, "need 0 <= k_e <= k_b");
  }
  const double digits = (k_b - k_e) * std::log(static_cast<double>(p));
  if (digits > 62.0 * std::log(2.0)) {
    Fail(ErrorCode::kInvalidArgument, "message set too large for 64-bit index");
  }
  const IMatrix g = generator.unaryExpr([p](int64_t v) { return Mod(v, p); });
  LinearCode code_b = CanonicalCode(p, g);
  if (code_b.dim != k_b) {
    Fail(ErrorCode::kRankDeficient, "generator rows are linearly dependent");
  }
  // Right inverse Y = E (G E)^{-1} with E selecting the pivot columns.
  IMatrix augmented = IMatrix::Zero(k_b, 2 * k_b);
  for (int c = 0; c < k_b; ++c) augmented.col(c) = g.col(code_b.pivots[c]);
  augmented.rightCols(k_b).setIdentity();
  const IMatrix inverse = CanonicalCode(p, augmented).generator.rightCols(k_b);
  IMatrix message_map = IMatrix::Zero(k_b - k_e, g.cols());
  for (int j = 0; j < k_b - k_e; ++j) {
    for (int c = 0; c < k_b; ++c) {
      message_map(j, code_b.pivots[c]) = inverse(c, k_e + j);
    }
  }
  const int n = n_a * t;
  LinearCode code_e = CanonicalCode(p, g.topRows(k_e));
  Lattice lattice_b = LiftCode(code_b, n);
  Lattice lattice_e = LiftCode(code_e, n);
  return NestedPair{p,
                    n_a,
                    t,
                    std::move(code_b),
                    std::move(code_e),
                    std::move(lattice_b),
                    std::move(lattice_e),
                    g.bottomRows(k_b - k_e),
                    std::move(message_map),
                    digits / t};
}

NestedPair SampleNestedPair(int64_t p, int n_a, int t, int k_b, int k_e,
                            Rng& rng) {
  if (k_e < 0 || k_e > k_b || k_b > 2 * n_a * t) {
    Fail(ErrorCode::kInvalidArgument, "need 0 <= k_e <= k_b <= 2 n_a T");
  }
  const int length = 2 * n_a * t;
  const LinearCode code_e = SampleRandomCode(p, length, k_e, rng);
  IMatrix g(k_b, length);
  g.topRows(k_e) = code_e.generator;
  while (true) {
    for (int r = k_e; r < k_b; ++r) {
      for (int c = 0; c < length; ++c) {
        g(r, c) = static_cast<int64_t>(rng.UniformInt(static_cast<uint64_t>(p)));
      }
    }
    if (CanonicalCode(p, g).dim == k_b) break;
  }
  return MakeNestedPair(p, g, k_e, n_a, t);
}

CVector CosetEncode(int64_t m, const NestedPair& pair) {
  if (m < 0 || m >= pair.num_messages()) {
    Fail(ErrorCode::kInvalidArgument,
         "message index " + std::to_string(m) + " out of range");
  }
  IVector word = IVector::Zero(pair.code_b.length);
  int64_t rest = m;
  for (Eigen::Index i = 0; i < pair.coset_rows.rows(); ++i) {
    const int64_t digit = rest % pair.p;
    rest /= pair.p;
    word += digit * pair.coset_rows.row(i).transpose();
  }
  word = word.unaryExpr([&](int64_t v) { return Mod(v, pair.p); });
  return ModLattice(CodeVectorToComplex(word), pair.lattice_e);
}

int64_t CosetDecode(const CVector& lambda_b, const NestedPair& pair) {
  const IVector word = ReductionMap(lambda_b, pair.p);
  const IVector digits = pair.message_map * word;
  int64_t m = 0;
  for (Eigen::Index i = digits.size() - 1; i >= 0; --i) {
    m = m * pair.p + Mod(digits(i), pair.p);
  }
  return m;
}

void WritePair(std::ostream& os, const NestedPair& pair) {
  os << pair.p << ' ' << pair.n_a << ' ' << pair.t << ' ' << pair.k_b() << ' '
     << pair.k_e() << '\n';
  const auto write_rows = [&os](const IMatrix& rows) {
    for (Eigen::Index r = 0; r < rows.rows(); ++r) {
      for (Eigen::Index c = 0; c < rows.cols(); ++c) {
        if (c > 0) os << ' ';
        os << rows(r, c);
      }
      os << '\n';
    }
  };
  write_rows(pair.code_e.generator);
  write_rows(pair.coset_rows);
}

NestedPair ReadPair(std::istream& is) {
  int64_t p = 0;
  int n_a = 0, t = 0, k_b = -1, k_e = -1;
  if (!(is >> p >> n_a >> t >> k_b >> k_e) || n_a <= 0 || t <= 0 || k_b < 0) {
    Fail(ErrorCode::kIo, "malformed pair header");
  }
  const int length = 2 * n_a * t;
  IMatrix g(k_b, length);
  for (int r = 0; r < k_b; ++r) {
    for (int c = 0; c < length; ++c) {
      if (!(is >> g(r, c))) Fail(ErrorCode::kIo, "truncated generator rows");
    }
  }
  if (k_e < 0 || k_e > k_b) Fail(ErrorCode::kIo, "malformed pair header");
  const LinearCode code_e = CanonicalCode(p, g.topRows(k_e));
  if (code_e.dim != k_e || code_e.generator != g.topRows(k_e)) {
    Fail(ErrorCode::kIo, "C_e rows are not in canonical form");
  }
  return MakeNestedPair(p, g, k_e, n_a, t);
}

void SavePair(const std::string& path, const NestedPair& pair) {
  std::ofstream os(path);
  if (!os) Fail(ErrorCode::kIo, "cannot write " + path);
  WritePair(os, pair);
}

NestedPair LoadPair(const std::string& path) {
  std::ifstream is(path);
  if (!is) Fail(ErrorCode::kIo, "cannot read " + path);
  return ReadPair(is);
}

MinkowskiHlawkaResult MinkowskiHlawkaEstimate(
    int64_t p, int t, int k, double volume,
    const std::function<double(double)>& radial_f, double cutoff, int draws,
    Rng& rng) {
  if (!(volume > 0.0) || !(cutoff > 0.0) || draws <= 0) {
    Fail(ErrorCode::kInvalidArgument, "volume, cutoff and draws must be > 0");
  }
  const int d = 2 * t;
  const double beta = std::pow(
      volume / std::pow(static_cast<double>(p), 2 * t - k), 1.0 / d);
  std::vector<double> sums;
  sums.reserve(draws);
  const RVector zero = RVector::Zero(d);
  for (int i = 0; i < draws; ++i) {
    const Lattice lattice = LiftCode(SampleRandomCode(p, d, k, rng), t);
    const ReducedBasis red = ReduceBasis(beta * lattice.real_generator());
    double s = 0.0;
    EnumerateBall(red.r, zero, cutoff * cutoff,
                  [&](const IVector&, double dist) {
                    if (dist > 0.0) s += radial_f(std::sqrt(dist));
                    return cutoff * cutoff;
                  });
    sums.push_back(s);
  }
  MinkowskiHlawkaResult out;
  out.draws = draws;
  out.empirical_mean = Mean(sums);
  out.standard_error = std::sqrt(Variance(sums) / draws);
  // Surface area of the unit sphere in R^d times the radial integral.
  const double sphere =
      2.0 * std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d);
  const double integral =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
          [&](double r) { return radial_f(r) * std::pow(r, d - 1); }, 0.0,
          cutoff, 15, 1e-13);
  out.reference = sphere * integral / volume;
  return out;
}

}  // namespace wtl
