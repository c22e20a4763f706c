#pragma once

#include "qeclab/rational.hpp"

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

namespace qeclab {

inline constexpr std::uint64_t kDefaultSeed = 20220917;

/// Seed from QECLAB_SEED when set and numeric, otherwise kDefaultSeed.
inline std::uint64_t seed_from_env() {
  if (const char* env = std::getenv("QECLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
    }
  }
  return kDefaultSeed;
}

/// Uniform random rational p/q in [lo, hi] with q drawn from 1..max_den.
inline Rational random_rational(std::mt19937_64& rng, long lo, long hi, long max_den = 64) {
  const long q = std::uniform_int_distribution<long>(1, max_den)(rng);
  const long p = std::uniform_int_distribution<long>(lo * q, hi * q)(rng);
  return Rational(p, q);
}

}  // namespace qeclab
