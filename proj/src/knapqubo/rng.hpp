// Copyright 2026 The knapqubo Authors.
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

#ifndef KNAPQUBO_RNG_HPP_
#define KNAPQUBO_RNG_HPP_

#include <array>
#include <cstdint>

namespace knapqubo {

// Deterministic 64-bit generator: xoshiro256** seeded through SplitMix64.
// Output is bit-identical on every platform for a given seed, which the
// standard library distributions do not guarantee.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Independent substream `index` of `seed`; used for per-read and per-trial
  // streams so results do not depend on execution order.
  static Rng Substream(std::uint64_t seed, std::uint64_t index) {
    return Rng(DeriveSeed(seed, index));
  }
  static std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index);

  std::uint64_t Next();

  // Uniform integer in [lo, hi], unbiased (rejection sampling). Requires lo <= hi.
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi);

  // Uniform double in [0, 1) with 53 random bits.
  double Uniform01() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  bool Bit() { return (Next() >> 63) != 0; }

 private:
  std::array<std::uint64_t, 4> state_;
};

// SplitMix64 finalizer.
std::uint64_t Mix64(std::uint64_t x);

}  // namespace knapqubo

#endif  // KNAPQUBO_RNG_HPP_
