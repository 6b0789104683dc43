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

#ifndef WTL_CONSTRUCTION_A_H_
#define WTL_CONSTRUCTION_A_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "wtl/lattice.h"
#include "wtl/linalg.h"
#include "wtl/rng.h"

namespace wtl {

bool IsPrime(int64_t p);

// Linear [length, dim] code over F_p with generator in reduced row echelon
// form: row i has a leading one at pivots[i] and zeros in every other pivot
// column.
struct LinearCode {
  int64_t p = 2;
  int length = 0;
  int dim = 0;
  IMatrix generator;  // dim x length, entries in [0, p)
  std::vector<int> pivots;
};

// Row-reduces `generator` over F_p and drops dependent rows. Throws
// kInvalidArgument if p is not prime.
LinearCode CanonicalCode(int64_t p, const IMatrix& generator);

// Basis (as rows) of {x in F_p^n : a x = 0} for an m x n matrix a.
IMatrix NullSpaceModP(const IMatrix& a, int64_t p);

// Uniformly random k-dimensional subspace of F_p^n: a uniform k x n matrix,
// redrawn until it has rank k, then canonicalized.
LinearCode SampleRandomCode(int64_t p, int length, int dim, Rng& rng);

// psi: Z[i]^N -> F_p^{2N}, (a_1 + b_1 i, ..., a_N + b_N i) ->
// (a_1, b_1, ..., a_N, b_N) mod p. x must be a Gaussian integer vector within
// kMembershipTol.
IVector ReductionMap(const CVector& x, int64_t p);

// Lambda(C) = psi^{-1}(C) in C^N for a code of length 2N; volume p^{2N-k}.
Lattice LiftCode(const LinearCode& code, int complex_dim);

// Nested Construction-A pair for n_a transmit antennas over T channel uses:
// complex dimension N = n_a T, codes of length 2N. C_e is spanned by the
// first k_e rows of the generator, and the remaining k_b - k_e rows are the
// coset representatives of C_b / C_e. Lambda_e is a sublattice of Lambda_b of
// index p^{k_b - k_e}.
struct NestedPair {
  int64_t p = 2;
  int n_a = 1;
  int t = 1;
  LinearCode code_b;
  LinearCode code_e;
  Lattice lattice_b;
  Lattice lattice_e;
  IMatrix coset_rows;   // (k_b - k_e) x 2N
  // (k_b - k_e) x 2N map over F_p that kills C_e and sends coset row j to e_j.
  IMatrix message_map;
  // (k_b - k_e) ln p / T nats per channel use.
  double rate = 0.0;

  int k_b() const { return code_b.dim; }
  int k_e() const { return code_e.dim; }
  int complex_dim() const { return n_a * t; }
  int64_t num_messages() const;
};

// `generator` is a k_b x 2N matrix of full rank over F_p.
NestedPair MakeNestedPair(int64_t p, const IMatrix& generator, int k_e, int n_a,
                          int t);
// C_e is a uniform k_e-dimensional code and the coset rows are uniform
// completions to rank k_b.
NestedPair SampleNestedPair(int64_t p, int n_a, int t, int k_b, int k_e,
                            Rng& rng);

// phi(m): message m has base-p digits d_0, d_1, ... ; the codeword
// sum_j d_j g_{k_e + j} over the coset rows is lifted to {0..p-1} and
// reduced into the fundamental parallelepiped of Lambda_e.
CVector CosetEncode(int64_t m, const NestedPair& pair);

// phi^{-1}: the message whose coset contains the lattice point `lambda_b`
// (any point of Lambda_b): the message map applied to psi(lambda_b).
int64_t CosetDecode(const CVector& lambda_b, const NestedPair& pair);

// Text form: a header line "p n_a T k_b k_e" followed by the k_e rows of the
// canonical generator of C_e and the k_b - k_e coset rows.
void WritePair(std::ostream& os, const NestedPair& pair);
NestedPair ReadPair(std::istream& is);
void SavePair(const std::string& path, const NestedPair& pair);
NestedPair LoadPair(const std::string& path);

struct MinkowskiHlawkaResult {
  double empirical_mean = 0.0;
  double standard_error = 0.0;
  double reference = 0.0;  // V^{-1} times the integral of f
  int draws = 0;
};

// Ensemble average of sum_{x in beta Lambda(C) \ 0} f(|x|) over random
// [2T, k] codes, each lattice rescaled by beta = (V / p^{2T-k})^{1/2T} to
// volume V. f is radial on R^{2T} and taken as zero beyond `cutoff`.
MinkowskiHlawkaResult MinkowskiHlawkaEstimate(
    int64_t p, int t, int k, double volume,
    const std::function<double(double)>& radial_f, double cutoff, int draws,
    Rng& rng);

}  // namespace wtl

#endif  // WTL_CONSTRUCTION_A_H_
