#include "psl4cd/cyclotomic.hpp"

#include <cctype>
#include <vector>

namespace psl4cd {

namespace {

// Coefficients from the leading term down.
const std::array<std::vector<int>, kMaxCyclotomicIndex> kPhiCoefficients = {{
    {1, -1},                                // 1
    {1, 1},                                 // 2
    {1, 1, 1},                              // 3
    {1, 0, 1},                              // 4
    {1, 1, 1, 1, 1},                        // 5
    {1, -1, 1},                             // 6
    {1, 1, 1, 1, 1, 1, 1},                  // 7
    {1, 0, 0, 0, 1},                        // 8
    {1, 0, 0, 1, 0, 0, 1},                  // 9
    {1, -1, 1, -1, 1},                      // 10
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},      // 11
    {1, 0, -1, 0, 1},                       // 12
}};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  DegreeExpr run() {
    DegreeExpr out;
    skip_ws();
    if (peek() == '1') {
      out.den = coefficient();
      skip_ws();
      if (at_end()) return out;
      expect('*');
    }
    factor(out);
    while (true) {
      skip_ws();
      if (at_end()) break;
      expect('*');
      factor(out);
    }
    return out;
  }

 private:
  unsigned coefficient() {
    ++pos_;  // '1'
    skip_ws();
    if (peek() != '/') return 1;
    ++pos_;
    skip_ws();
    std::size_t at = pos_;
    unsigned den = integer();
    if (den != 2 && den != 4) throw ExprParseError("coefficient must be 1, 1/2 or 1/4", at);
    return den;
  }

  void factor(DegreeExpr& out) {
    skip_ws();
    std::size_t at = pos_;
    char c = peek();
    if (c == 'q') {
      ++pos_;
      out.q_power += exponent();
    } else if (c == 'P') {
      ++pos_;
      skip_ws();
      std::size_t k_at = pos_;
      unsigned k = integer();
      if (k < 1 || k > kMaxCyclotomicIndex) {
        throw ExprParseError("cyclotomic index must be in 1..12", k_at);
      }
      out.phi[k - 1] += exponent();
    } else {
      throw ExprParseError(at_end() ? "unexpected end of input" : "expected 'q' or 'P'", at);
    }
  }

  unsigned exponent() {
    skip_ws();
    if (peek() != '^') return 1;
    ++pos_;
    skip_ws();
    std::size_t at = pos_;
    if (peek() == '-') throw ExprParseError("negative exponent", at);
    unsigned e = integer();
    if (e == 0) throw ExprParseError("zero exponent", at);
    return e;
  }

  unsigned integer() {
    std::size_t at = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ExprParseError("expected an integer", at);
    unsigned long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<unsigned>(peek() - '0');
      if (value > 1'000'000) throw ExprParseError("integer too large", at);
      ++pos_;
    }
    return static_cast<unsigned>(value);
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) throw ExprParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

u128 phi_value(unsigned k, u128 q) {
  if (k < 1 || k > kMaxCyclotomicIndex) throw DomainError("phi_value: k must be in 1..12");
  if (q < 2) throw DomainError("phi_value: q must be at least 2");
  // Horner partial sums stay positive for q >= 2, for every k <= 12.
  __int128 acc = 0;
  const auto sq = static_cast<__int128>(q);
  if (sq < 0) throw OverflowError("phi_value: q too large");
  for (int c : kPhiCoefficients[k - 1]) {
    if (__builtin_mul_overflow(acc, sq, &acc) || __builtin_add_overflow(acc, __int128{c}, &acc)) {
      throw OverflowError("phi_value overflow");
    }
  }
  return static_cast<u128>(acc);
}

DegreeExpr parse_expr(std::string_view text) { return Parser(text).run(); }

std::string format_expr(const DegreeExpr& x) {
  std::string out;
  auto append = [&](const std::string& part) {
    if (!out.empty()) out += '*';
    out += part;
  };
  if (x.den != 1) append("1/" + std::to_string(x.den));
  if (x.q_power == 1) append("q");
  if (x.q_power > 1) append("q^" + std::to_string(x.q_power));
  for (unsigned k = 1; k <= kMaxCyclotomicIndex; ++k) {
    unsigned e = x.phi_exponent(k);
    if (e == 0) continue;
    append("P" + std::to_string(k) + (e > 1 ? "^" + std::to_string(e) : std::string()));
  }
  return out.empty() ? "1" : out;
}

u128 evaluate(const DegreeExpr& x, u128 q) {
  u128 product = checked_pow(q, x.q_power);
  for (unsigned k = 1; k <= kMaxCyclotomicIndex; ++k) {
    unsigned e = x.phi_exponent(k);
    if (e != 0) product = checked_mul(product, checked_pow(phi_value(k, q), e));
  }
  if (product % x.den != 0) {
    throw NonIntegral(format_expr(x) + " is not integral at q = " + to_string(q));
  }
  return product / x.den;
}

bool expr_divides(const DegreeExpr& divisor, const DegreeExpr& multiple, u128 q) {
  return evaluate(multiple, q) % evaluate(divisor, q) == 0;
}

Factorization factorize_expr(const DegreeExpr& x, const PrimePowerQ& q) {
  Factorization out = Factorization::prime_power(q.p(), q.f() * x.q_power);
  for (unsigned k = 1; k <= kMaxCyclotomicIndex; ++k) {
    unsigned e = x.phi_exponent(k);
    if (e != 0) out *= factorize(phi_value(k, q.q())).pow(e);
  }
  if (x.den != 1) {
    try {
      out = out.quotient(factorize(x.den));
    } catch (const NonIntegral&) {
      throw NonIntegral(format_expr(x) + " is not integral at q = " + std::to_string(q.q()));
    }
  }
  return out;
}

}  // namespace psl4cd
