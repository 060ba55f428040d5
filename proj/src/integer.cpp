#include "psl4cd/integer.hpp"

#include <algorithm>

namespace psl4cd {

std::string to_string(u128 value) {
  if (value == 0) return "0";
  std::string out;
  while (value != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string to_string(const BigNat& value) { return value.str(); }

u128 parse_u128(std::string_view text) {
  if (text.empty()) throw DomainError("empty integer");
  u128 out = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw DomainError("not a decimal integer: " + std::string(text));
    u128 next;
    if (__builtin_mul_overflow(out, u128{10}, &next) ||
        __builtin_add_overflow(next, u128(c - '0'), &next)) {
      throw DomainError("integer too large: " + std::string(text));
    }
    out = next;
  }
  return out;
}

u128 checked_pow(u128 base, unsigned exponent) {
  u128 result = 1;
  while (exponent != 0) {
    if (exponent & 1U) result = checked_mul(result, base);
    exponent >>= 1U;
    if (exponent != 0) base = checked_mul(base, base);
  }
  return result;
}

u128 gcd(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace psl4cd
