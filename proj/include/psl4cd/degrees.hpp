#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psl4cd/arith.hpp"
#include "psl4cd/cyclotomic.hpp"

namespace psl4cd {

/// Smallest q the degree tables and the verifiers are stated for.
inline constexpr std::uint64_t kMinQ = 13;

enum class ConditionKind {
  always,
  q_ge,
  q_eq4_or_ge6,
  mod4_eq,
  possible_unknown,
  excluded,
};

struct RowCondition {
  ConditionKind kind = ConditionKind::always;
  unsigned param = 0;  // N for q_ge, r for mod4_eq

  /// True when the row is a degree at q for certain.
  bool certainly_holds(const PrimePowerQ& q) const;
  /// "any q", "q >= 4", "q = 4 or q >= 6", "q = 3 mod 4", "possible", "excluded".
  std::string describe() const;
};

struct DegreeRow {
  DegreeExpr expr;
  RowCondition condition;
  std::string note;
};

/// Every character-degree row of PSL4(q), with the "c = 1/2, 1/4" entries
/// expanded into one row per coefficient. Deterministic order.
const std::vector<DegreeRow>& psl4_degree_rows();

struct DegreeEntry {
  u128 value = 0;
  std::vector<DegreeExpr> exprs;  // every row expression taking this value
};

struct DegreeSet {
  PrimePowerQ q;
  std::vector<DegreeEntry> certain;   // ascending by value
  std::vector<DegreeEntry> possible;  // ascending by value, superset of certain
  std::vector<std::string> audit;

  const DegreeEntry* find_possible(u128 value) const;
  bool in_possible(u128 value) const { return find_possible(value) != nullptr; }
  bool in_certain(u128 value) const;
  /// True when `divisor` divides at least one possible value.
  bool divides_some_possible(u128 divisor) const;
  /// Possible values other than 1.
  std::size_t nontrivial_possible_count() const;
};

/// Throws DomainError for q < 13.
DegreeSet degree_set(const PrimePowerQ& q);

enum class Family {
  SL4, PSL4, PGL4, GL4,
  SL2, PSL2, GL2, GU2,
  SL3, PSL3, PSU3,
  Sp4, PSp4,
  PSU4, SO3, Sz,
};

std::string family_name(Family family);

/// Exact order assembled from factored cyclotomic values.
Factorization group_order(Family family, const PrimePowerQ& q);

/// Primes dividing the group order, ascending.
std::vector<u128> prime_spectrum(Family family, const PrimePowerQ& q);

/// Product q^a * prod Phi_k(q)^{e_k} divided by `divisor`, as a factorization.
/// Throws NonIntegral when the division is not exact.
Factorization cyclotomic_product(const PrimePowerQ& q, unsigned q_power,
                                 const std::vector<std::pair<unsigned, unsigned>>& phi_powers,
                                 u128 divisor = 1);

enum class FactGroup { PSL4, SL4, PGL4 };

std::string fact_group_name(FactGroup group);

/// Polynomial in q with integer coefficients over a positive denominator.
struct QPolynomial {
  std::vector<std::int64_t> coefficients;  // ascending powers of q
  std::int64_t denominator = 1;
  std::string text;

  /// Exact value; throws NonIntegral when the denominator does not divide.
  std::int64_t evaluate(std::uint64_t q) const;
};

struct MultiplicityFact {
  FactGroup group;
  DegreeExpr expr;
  QPolynomial multiplicity;
  std::string condition;
  bool applies = false;
  std::optional<std::int64_t> count;  // set when applies
};

struct MembershipFact {
  FactGroup group;
  DegreeExpr expr;
  bool member = false;
  std::string condition;
  bool applies = false;
  std::optional<u128> value;  // set when applies
};

struct FactSheet {
  std::vector<MultiplicityFact> multiplicities;
  std::vector<MembershipFact> memberships;
};

/// The quoted SL4(q) / PGL4(q) facts with their conditions evaluated at q.
FactSheet sl4_pgl4_facts(const PrimePowerQ& q);

}  // namespace psl4cd
