// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

namespace qrmq {

// Draws are mapped from raw mt19937_64 output by hand: the engine's output
// sequence is pinned by the standard, the <random> distributions are not, and
// seeded runs must replay bit-identically on any toolchain.

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, n); unbiased via rejection. n == 0 means the full
/// 64-bit range.
inline std::uint64_t uniform_below(std::mt19937_64& g, std::uint64_t n) {
  if (n == 0) return g();
  std::uint64_t x, r;
  do {
    x = g();
    r = x % n;
  } while (x - r > std::uint64_t{0} - n);  // rejects the final partial block
  return r;
}

/// Uniform integer in [lo, hi], inclusive.
inline std::uint64_t uniform_range(std::mt19937_64& g, std::uint64_t lo, std::uint64_t hi) {
  return lo + uniform_below(g, hi - lo + 1);  // hi - lo + 1 == 0 means full range
}

}  // namespace qrmq
