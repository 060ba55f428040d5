#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "psl4cd/arith.hpp"
#include "psl4cd/integer.hpp"

namespace psl4cd {

inline constexpr unsigned kMaxCyclotomicIndex = 12;

/// Value of the k-th cyclotomic polynomial at q, 1 <= k <= 12, q >= 2.
u128 phi_value(unsigned k, u128 q);

/// Symbolic degree (1/den) * q^a * prod_k Phi_k^{e_k}.
///
/// The representation is canonical by construction: den is one of 1, 2, 4
/// and an absent cyclotomic factor is stored as exponent 0, so two
/// expressions are equal exactly when all fields are equal.
struct DegreeExpr {
  unsigned den = 1;
  unsigned q_power = 0;
  std::array<unsigned, kMaxCyclotomicIndex> phi{};

  unsigned phi_exponent(unsigned k) const { return phi.at(k - 1); }

  friend bool operator==(const DegreeExpr&, const DegreeExpr&) = default;
  friend auto operator<=>(const DegreeExpr&, const DegreeExpr&) = default;
};

class ExprParseError : public DomainError {
 public:
  ExprParseError(const std::string& message, std::size_t position)
      : DomainError(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar, whitespace-insensitive:
///   expr   := coef | [coef '*'] factor {'*' factor}
///   coef   := '1' | '1/2' | '1/4'
///   factor := 'q' ['^' int] | 'P' k ['^' int]
/// Repeated factors are merged.
DegreeExpr parse_expr(std::string_view text);

/// Canonical rendering, e.g. "1/2*q^2*P1^2*P3"; the trivial expression is "1".
std::string format_expr(const DegreeExpr& expr);

/// Exact value at q; throws NonIntegral when den does not divide the product.
u128 evaluate(const DegreeExpr& expr, u128 q);

/// Numeric divisibility of the two values at q.
bool expr_divides(const DegreeExpr& divisor, const DegreeExpr& multiple, u128 q);

/// Factorization of the value at q assembled from the factored cyclotomic
/// values, so nothing larger than Phi_k(q) is ever factored.
Factorization factorize_expr(const DegreeExpr& expr, const PrimePowerQ& q);

/// Shorthand for parse_expr on trusted literals.
inline DegreeExpr expr(std::string_view text) { return parse_expr(text); }

}  // namespace psl4cd
