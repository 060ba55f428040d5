#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "psl4cd/arith.hpp"
#include "psl4cd/integer.hpp"

namespace psl4cd::testing {

// Fixed seed so every run draws the same cases.
inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed'1234'abcd'0001ULL);
  return engine;
}

inline std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng());
}

// Prime powers in the sweep range used by the property tests.
inline const std::vector<std::uint64_t>& sweep_qs() {
  static const std::vector<std::uint64_t> qs = prime_powers_in(13, 499);
  return qs;
}

inline bool trial_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::string str(u128 v) { return to_string(v); }

}  // namespace psl4cd::testing
