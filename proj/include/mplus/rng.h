// Copyright 2026 The mplus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MPLUS_RNG_H_
#define MPLUS_RNG_H_

#include <cstdint>
#include <random>

namespace mplus {

// Deterministic random source used by every seeded component.
//
// Algorithm: std::mt19937_64 seeded with the raw 64-bit seed. The engine's
// output sequence is fixed by the C++ standard, and the derived draws below
// use no std::*_distribution (those are implementation-defined), so a seed
// reproduces bit-identical results on any conforming toolchain.
//   Below(n): rejection sampling on the raw 64-bit output (threshold 2^64 mod n).
//   Unit():   top 53 bits of one output, scaled to [0, 1).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform integer in [0, n). n must be positive.
  std::uint64_t Below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % n;
    }
  }

  double Unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool Bernoulli(double p) { return Unit() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mplus

#endif  // MPLUS_RNG_H_
