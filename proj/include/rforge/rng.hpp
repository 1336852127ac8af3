// Copyright 2026 The Authors.
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

#pragma once

#include <cmath>
#include <cstdint>

#include "rforge/arith.hpp"

namespace rforge {

inline constexpr std::uint64_t kDefaultSeed = 0xD1CE;

/// splitmix64. Portable and bit-reproducible, unlike the std distributions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Uniform in [0, n); n > 0. Modulo bias is below 2^-40 for the sizes used here.
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::uint64_t state_;
};

/// Independent stream for (seed, index).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0xA0761D6478BD642FULL * (index + 1)));
  return g.next();
}

/// Dyadic rational approximately log-uniform on [2^lo, 2^hi]: a 21-bit
/// mantissa in [2^20, 2^21) scaled by a power of two.
inline Rat log_uniform_dyadic(SplitMix64& g, int lo = -10, int hi = 10) {
  double x = lo + (hi - lo) * g.uniform();
  double e = std::floor(x);
  auto mant = static_cast<std::int64_t>(std::ldexp(std::exp2(x - e), 20));
  if (mant >= (std::int64_t{1} << 21)) mant = (std::int64_t{1} << 21) - 1;
  return Rat::dyadic(mant, static_cast<int>(e) - 20);
}

/// Rational uniform in (0, 1) on the grid k / den.
inline Rat open_unit_rational(SplitMix64& g, long den = 1024) {
  return Rat(1 + static_cast<long>(g.below(static_cast<std::uint64_t>(den - 1))), den);
}

}  // namespace rforge
