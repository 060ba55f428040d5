#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psl4cd/integer.hpp"

namespace psl4cd {

struct PrimePower {
  u128 prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical prime factorization: terms sorted by prime, exponents >= 1.
/// The empty factorization is the number 1.
class Factorization {
 public:
  Factorization() = default;

  static Factorization prime_power(u128 prime, unsigned exponent);

  const std::vector<PrimePower>& terms() const { return terms_; }
  bool is_one() const { return terms_.empty(); }
  unsigned exponent_of(u128 prime) const;
  std::vector<u128> primes() const;

  /// Exact value, or nullopt if it does not fit in 128 bits.
  std::optional<u128> value() const;
  BigNat big_value() const;

  bool divides(const Factorization& other) const;
  /// Throws NonIntegral unless `divisor` divides *this.
  Factorization quotient(const Factorization& divisor) const;
  Factorization pow(unsigned exponent) const;
  Factorization gcd(const Factorization& other) const;

  Factorization& operator*=(const Factorization& other);
  friend Factorization operator*(Factorization lhs, const Factorization& rhs) { return lhs *= rhs; }
  friend bool operator==(const Factorization&, const Factorization&) = default;

  /// "2^2 5 7 17"; "1" for the empty factorization.
  std::string to_string() const;

 private:
  std::vector<PrimePower> terms_;
};

bool is_prime(u128 n);

/// Trial division up to 10^6, then Brent's rho with fixed seeds. Throws
/// DomainError for n = 0.
Factorization factorize(u128 n);

struct PrimePowerParts {
  u128 prime;
  unsigned exponent;
};

/// Throws NotPrimePower unless n = p^f with f >= 1; DomainError for n < 2.
PrimePowerParts prime_power_decompose(u128 n);

struct PerfectPower {
  u128 base;
  unsigned exponent;
  friend bool operator==(const PerfectPower&, const PerfectPower&) = default;
};

/// n = base^exponent with the largest exponent >= 2 (hence the smallest base).
std::optional<PerfectPower> is_perfect_power(u128 n);

/// floor(n^(1/k)) for k >= 1.
u128 integer_root(u128 n, unsigned k);

struct ZsigmondyResult {
  std::vector<u128> primitives;  // ascending
  std::optional<u128> smallest;
};

/// Primes dividing q^k - 1 and no q^i - 1 with 1 <= i < k.
ZsigmondyResult zsigmondy(u128 q, unsigned k);

u128 pow_mod(u128 base, u128 exponent, u128 modulus);

/// q = p^f with q >= 2, plus d = gcd(q - 1, 4).
class PrimePowerQ {
 public:
  static PrimePowerQ from(std::uint64_t q);

  std::uint64_t q() const { return q_; }
  std::uint64_t p() const { return p_; }
  unsigned f() const { return f_; }
  unsigned d() const { return d_; }
  bool odd() const { return p_ != 2; }

  friend bool operator==(const PrimePowerQ&, const PrimePowerQ&) = default;

 private:
  PrimePowerQ(std::uint64_t q, std::uint64_t p, unsigned f);
  std::uint64_t q_;
  std::uint64_t p_;
  unsigned f_;
  unsigned d_;
};

/// Ascending prime powers in [lo, hi].
std::vector<std::uint64_t> prime_powers_in(std::uint64_t lo, std::uint64_t hi);

}  // namespace psl4cd
