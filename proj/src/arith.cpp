#include "psl4cd/arith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

namespace psl4cd {

namespace {

constexpr std::uint32_t kTrialLimit = 1'000'000;
constexpr u128 kU64Max = std::numeric_limits<std::uint64_t>::max();

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

u128 add_mod(u128 a, u128 b, u128 m) {
  // a, b < m
  return a >= m - b ? a - (m - b) : a + b;
}

u128 mul_mod(u128 a, u128 b, u128 m) {
  if (m <= kU64Max) return (a % m) * (b % m) % m;
  a %= m;
  b %= m;
  u128 result = 0;
  while (b != 0) {
    if (b & 1U) result = add_mod(result, a, m);
    a = add_mod(a, a, m);
    b >>= 1U;
  }
  return result;
}

bool miller_rabin_round(u128 n, u128 d, unsigned s, u128 base) {
  u128 x = pow_mod(base % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of the odd
// composite n. Seeds are fixed so output is reproducible.
u128 rho_split(u128 n) {
  for (u128 c = 1;; ++c) {
    u128 y = 2, x = 2, ys = 2, g = 1, q = 1;
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 128;
    auto step = [&](u128 v) { return add_mod(mul_mod(v, v, n), c % n, n); };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = step(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = gcd(q, n);
        k += kBatch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_large(u128 n, std::map<u128, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  if (auto pp = is_perfect_power(n)) {
    std::map<u128, unsigned> base;
    factor_large(pp->base, base);
    for (auto [p, e] : base) out[p] += e * pp->exponent;
    return;
  }
  u128 d = rho_split(n);
  factor_large(d, out);
  factor_large(n / d, out);
}

}  // namespace

Factorization Factorization::prime_power(u128 prime, unsigned exponent) {
  Factorization f;
  if (exponent != 0) f.terms_.push_back({prime, exponent});
  return f;
}

unsigned Factorization::exponent_of(u128 prime) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), prime,
                             [](const PrimePower& t, u128 p) { return t.prime < p; });
  return it != terms_.end() && it->prime == prime ? it->exponent : 0;
}

std::vector<u128> Factorization::primes() const {
  std::vector<u128> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.prime);
  return out;
}

std::optional<u128> Factorization::value() const {
  try {
    u128 v = 1;
    for (const auto& t : terms_) v = checked_mul(v, checked_pow(t.prime, t.exponent));
    return v;
  } catch (const OverflowError&) {
    return std::nullopt;
  }
}

BigNat Factorization::big_value() const {
  BigNat v = 1;
  for (const auto& t : terms_) v *= boost::multiprecision::pow(to_big(t.prime), t.exponent);
  return v;
}

bool Factorization::divides(const Factorization& other) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const PrimePower& t) { return other.exponent_of(t.prime) >= t.exponent; });
}

Factorization Factorization::quotient(const Factorization& divisor) const {
  if (!divisor.divides(*this)) {
    throw NonIntegral(divisor.to_string() + " does not divide " + to_string());
  }
  Factorization out;
  for (const auto& t : terms_) {
    unsigned e = t.exponent - divisor.exponent_of(t.prime);
    if (e != 0) out.terms_.push_back({t.prime, e});
  }
  return out;
}

Factorization Factorization::pow(unsigned exponent) const {
  Factorization out;
  if (exponent == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.exponent *= exponent;
  return out;
}

Factorization Factorization::gcd(const Factorization& other) const {
  Factorization out;
  for (const auto& t : terms_) {
    unsigned e = std::min(t.exponent, other.exponent_of(t.prime));
    if (e != 0) out.terms_.push_back({t.prime, e});
  }
  return out;
}

Factorization& Factorization::operator*=(const Factorization& other) {
  std::vector<PrimePower> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->prime < b->prime)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->prime < a->prime) {
      merged.push_back(*b++);
    } else {
      merged.push_back({a->prime, a->exponent + b->exponent});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

std::string Factorization::to_string() const {
  if (terms_.empty()) return "1";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += ' ';
    out += psl4cd::to_string(t.prime);
    if (t.exponent > 1) out += '^' + std::to_string(t.exponent);
  }
  return out;
}

u128 pow_mod(u128 base, u128 exponent, u128 modulus) {
  if (modulus == 1) return 0;
  u128 result = 1;
  base %= modulus;
  while (exponent != 0) {
    if (exponent & 1U) result = mul_mod(result, base, modulus);
    base = mul_mod(base, base, modulus);
    exponent >>= 1U;
  }
  return result;
}

bool is_prime(u128 n) {
  if (n < 2) return false;
  static constexpr std::uint32_t kBases[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                             31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
  for (std::uint32_t b : kBases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  u128 d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // The first 12 prime bases are a proof below 3.18e23, the first 13 below
  // 3.3e24. Larger inputs get all 20 bases: a fixed, reproducible test.
  std::size_t rounds = n < (u128{1} << 64) ? 12 : 20;
  for (std::size_t i = 0; i < rounds; ++i) {
    if (!miller_rabin_round(n, d, s, kBases[i])) return false;
  }
  return true;
}

Factorization factorize(u128 n) {
  if (n == 0) throw DomainError("factorize: n must be positive");
  std::map<u128, unsigned> found;
  std::size_t checked = 0;
  bool remainder_prime = false;
  for (std::uint32_t p : small_primes()) {
    if (u128{p} * p > n) {
      remainder_prime = true;
      break;
    }
    if (n <= kU64Max) {
      auto m = static_cast<std::uint64_t>(n);
      if (m % p == 0) {
        unsigned e = 0;
        while (m % p == 0) {
          m /= p;
          ++e;
        }
        found[p] = e;
        n = m;
      }
    } else if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      found[p] = e;
    }
    if (++checked % 4096 == 0 && n > 1 && is_prime(n)) {
      remainder_prime = true;
      break;
    }
  }
  if (n > 1) {
    if (remainder_prime) {
      ++found[n];
    } else {
      factor_large(n, found);
    }
  }
  Factorization out;
  for (auto [p, e] : found) out *= Factorization::prime_power(p, e);
  return out;
}

PrimePowerParts prime_power_decompose(u128 n) {
  if (n < 2) throw DomainError("prime_power_decompose: n must be at least 2");
  Factorization f = factorize(n);
  if (f.terms().size() != 1) throw NotPrimePower(to_string(n) + " is not a prime power");
  return {f.terms().front().prime, f.terms().front().exponent};
}

u128 integer_root(u128 n, unsigned k) {
  if (k == 0) throw DomainError("integer_root: k must be positive");
  if (k == 1 || n < 2) return n;
  auto guess = static_cast<long double>(n);
  u128 r = static_cast<u128>(std::pow(guess, 1.0L / k));
  auto fits = [&](u128 x) {
    try {
      return checked_pow(x, k) <= n;
    } catch (const OverflowError&) {
      return false;
    }
  };
  while (r > 0 && !fits(r)) --r;
  while (fits(r + 1)) ++r;
  return r;
}

std::optional<PerfectPower> is_perfect_power(u128 n) {
  if (n < 2) throw DomainError("is_perfect_power: n must be at least 2");
  // Peel off prime-exponent roots until none is exact; the product of the
  // peeled exponents is maximal and the remaining base minimal.
  static constexpr unsigned kPrimeExponents[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                                 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
                                                 83, 89, 97, 101, 103, 107, 109, 113, 127};
  u128 base = n;
  unsigned exponent = 1;
  bool peeled = true;
  while (peeled) {
    peeled = false;
    unsigned bits = 0;  // floor(log2 base)
    for (u128 v = base; v > 1; v >>= 1U) ++bits;
    for (unsigned e : kPrimeExponents) {
      if (e > bits) break;
      u128 r = integer_root(base, e);
      if (checked_pow(r, e) == base) {
        base = r;
        exponent *= e;
        peeled = true;
        break;
      }
    }
  }
  if (exponent == 1) return std::nullopt;
  return PerfectPower{base, exponent};
}

ZsigmondyResult zsigmondy(u128 q, unsigned k) {
  if (q < 2 || k < 1) throw DomainError("zsigmondy: need q >= 2 and k >= 1");
  u128 rest = checked_pow(q, k) - 1;
  for (unsigned i = 1; i < k; ++i) {
    u128 earlier = checked_pow(q, i) - 1;
    for (u128 g = gcd(rest, earlier); g > 1; g = gcd(rest, g)) rest /= g;
  }
  ZsigmondyResult out;
  if (rest > 1) out.primitives = factorize(rest).primes();
  if (!out.primitives.empty()) out.smallest = out.primitives.front();
  return out;
}

PrimePowerQ::PrimePowerQ(std::uint64_t q, std::uint64_t p, unsigned f)
    : q_(q), p_(p), f_(f), d_(static_cast<unsigned>(std::gcd<std::uint64_t>(q - 1, 4))) {}

PrimePowerQ PrimePowerQ::from(std::uint64_t q) {
  auto parts = prime_power_decompose(q);
  return PrimePowerQ(q, static_cast<std::uint64_t>(parts.prime), parts.exponent);
}

std::vector<std::uint64_t> prime_powers_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n <= hi; ++n) {
    if (factorize(n).terms().size() == 1) out.push_back(n);
  }
  return out;
}

}  // namespace psl4cd
