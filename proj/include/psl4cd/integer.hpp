#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace psl4cd {

// Every degree value, cyclotomic value and primitive prime handled by the
// toolkit fits in 128 bits for the supported range of q. Group orders and
// subgroup indices can exceed that and are carried as factorizations, with
// BigNat used only for rendering and comparison.
using u128 = unsigned __int128;
using BigNat = boost::multiprecision::cpp_int;

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotPrimePower : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonIntegral : public DomainError {
 public:
  using DomainError::DomainError;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

std::string to_string(u128 value);
std::string to_string(const BigNat& value);

// Parses a non-negative decimal integer; throws DomainError on junk or overflow.
u128 parse_u128(std::string_view text);

inline BigNat to_big(u128 value) {
  BigNat hi = static_cast<std::uint64_t>(value >> 64);
  return (hi << 64) | BigNat(static_cast<std::uint64_t>(value));
}

inline u128 checked_mul(u128 a, u128 b) {
  u128 out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("128-bit multiplication overflow");
  return out;
}

inline u128 checked_add(u128 a, u128 b) {
  u128 out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("128-bit addition overflow");
  return out;
}

u128 checked_pow(u128 base, unsigned exponent);

u128 gcd(u128 a, u128 b);

}  // namespace psl4cd
