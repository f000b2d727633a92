#pragma once

#include <cstdint>
#include <random>

#include "negtype/rational.hpp"

namespace negtype::detail {

/// Uniform integer in [0, bound) by rejection; portable across standard
/// libraries, unlike std::uniform_int_distribution.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do x = rng(); while (x >= limit);
  return x % bound;
}

/// min_len * (1 + j/60) for uniform j in [0, 60].
inline Rational random_length(std::mt19937_64& rng, const Rational& min_len) {
  const auto j = uniform_below(rng, 61);
  return min_len * frac(60 + static_cast<long>(j), 60);
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// SplitMix64 finalizer; derives independent per-task seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace negtype::detail
