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

#ifndef WTL_RNG_H_
#define WTL_RNG_H_

#include <cstdint>
#include <random>

namespace wtl {

// SplitMix64 finalizer; used to derive independent seeds.
uint64_t MixSeed(uint64_t x);

// Seed for substream `index` of a run seeded with `seed`: the documented
// derivation is seed XOR index, passed through MixSeed when the engine is
// constructed.
inline uint64_t DeriveSeed(uint64_t seed, uint64_t index) {
  return seed ^ index;
}

// Reproducible random source. Every draw is computed from raw engine output
// with fixed formulas, so streams are identical across standard libraries.
// Not thread-safe: give each worker its own instance.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t NextU64() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double Uniform01();
  // Uniform integer in [0, n).
  uint64_t UniformInt(uint64_t n);
  // Standard normal (Box-Muller).
  double Normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace wtl

#endif  // WTL_RNG_H_
