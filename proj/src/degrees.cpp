#include "psl4cd/degrees.hpp"

#include <algorithm>
#include <map>

namespace psl4cd {

namespace {

RowCondition always() { return {ConditionKind::always, 0}; }
RowCondition q_ge(unsigned n) { return {ConditionKind::q_ge, n}; }
RowCondition q_eq4_or_ge6() { return {ConditionKind::q_eq4_or_ge6, 0}; }
RowCondition mod4_eq(unsigned r) { return {ConditionKind::mod4_eq, r}; }
RowCondition possible() { return {ConditionKind::possible_unknown, 0}; }
RowCondition contradiction() { return {ConditionKind::excluded, 0}; }

std::vector<DegreeRow> build_rows() {
  const std::string left = "character degree table, left column";
  const std::string right = "character degree table, right column";
  const std::string half_row = "; c = 1/2 entry of the c = 1/2, 1/4 row";
  const std::string quarter_row = "; c = 1/4 entry of the c = 1/2, 1/4 row";
  return {
      {expr("1"), always(), left},
      {expr("q*P3"), always(), left},
      {expr("P2*P4"), q_eq4_or_ge6(), left},
      {expr("P1^2*P3"), always(), left},
      {expr("1/2*P1^2*P3"), possible(), left + "; existence condition not recoverable"},
      {expr("q^2*P4"), always(), left},
      {expr("P3*P4"), q_ge(4), left},
      {expr("1/2*P3*P4"), mod4_eq(3),
       left + "; exactly two such characters when q = 3 mod 4, none of PGL4(q)"},
      {expr("P1*P3*P4"), always(), left},
      {expr("q^3*P3"), always(), left},
      {expr("q*P3*P4"), q_ge(3), left},
      {expr("q*P2^2*P4"), q_eq4_or_ge6(), left},
      {expr("P2*P3*P4"), q_ge(4), left},
      {expr("P1^3*P2*P3"), always(), left},
      {expr("1/2*P1^3*P2*P3"), possible(), left + half_row},
      {expr("1/4*P1^3*P2*P3"), possible(), left + quarter_row},
      {expr("q^2*P1^2*P3"), always(), right},
      {expr("1/2*q^2*P1^2*P3"), possible(), right + "; existence condition not recoverable"},
      {expr("P1^2*P3*P4"), q_ge(4), right},
      {expr("1/2*P1^2*P3*P4"), possible(), right + half_row},
      {expr("1/4*P1^2*P3*P4"), mod4_eq(1),
       right + quarter_row + "; exactly four such characters when q = 1 mod 4"},
      {expr("P1^2*P2^2*P4"), always(), right},
      {expr("q^6"), always(), right + "; Steinberg character"},
      {expr("q*P1*P3*P4"), always(), right},
      {expr("P1*P2*P3*P4"), q_ge(3), right},
      {expr("1/2*P1*P2*P3*P4"), contradiction(),
       right + "; listed as possible, but integral only for odd q where it is a degree of "
               "SL4(q) and not of PSL4(q)"},
      {expr("q^3*P2*P4"), q_eq4_or_ge6(), right},
      {expr("q^2*P3*P4"), q_ge(3), right},
      {expr("1/2*q^2*P3*P4"), possible(), right + "; existence condition not recoverable"},
      {expr("q*P2*P3*P4"), q_ge(4), right},
      {expr("P2^2*P3*P4"), q_ge(7), right},
      {expr("1/2*P2^2*P3*P4"), possible(), right + half_row},
      {expr("1/4*P2^2*P3*P4"), possible(), right + quarter_row},
  };
}

void add_entry(std::map<u128, DegreeEntry>& entries, u128 value, const DegreeExpr& x) {
  auto& entry = entries[value];
  entry.value = value;
  entry.exprs.push_back(x);
}

std::vector<DegreeEntry> flatten(const std::map<u128, DegreeEntry>& entries) {
  std::vector<DegreeEntry> out;
  out.reserve(entries.size());
  for (const auto& [value, entry] : entries) out.push_back(entry);
  return out;
}

const DegreeEntry* find_entry(const std::vector<DegreeEntry>& entries, u128 value) {
  auto it = std::lower_bound(entries.begin(), entries.end(), value,
                             [](const DegreeEntry& e, u128 v) { return e.value < v; });
  return it != entries.end() && it->value == value ? &*it : nullptr;
}

u128 gcd_q_minus_1(const PrimePowerQ& q, u128 n) { return gcd(u128{q.q() - 1}, n); }

}  // namespace

bool RowCondition::certainly_holds(const PrimePowerQ& q) const {
  switch (kind) {
    case ConditionKind::always:
      return true;
    case ConditionKind::q_ge:
      return q.q() >= param;
    case ConditionKind::q_eq4_or_ge6:
      return q.q() == 4 || q.q() >= 6;
    case ConditionKind::mod4_eq:
      return q.q() % 4 == param;
    case ConditionKind::possible_unknown:
    case ConditionKind::excluded:
      return false;
  }
  return false;
}

std::string RowCondition::describe() const {
  switch (kind) {
    case ConditionKind::always:
      return "any q";
    case ConditionKind::q_ge:
      return "q >= " + std::to_string(param);
    case ConditionKind::q_eq4_or_ge6:
      return "q = 4 or q >= 6";
    case ConditionKind::mod4_eq:
      return "q = " + std::to_string(param) + " mod 4";
    case ConditionKind::possible_unknown:
      return "possible";
    case ConditionKind::excluded:
      return "excluded";
  }
  return "";
}

const std::vector<DegreeRow>& psl4_degree_rows() {
  static const std::vector<DegreeRow> rows = build_rows();
  return rows;
}

const DegreeEntry* DegreeSet::find_possible(u128 value) const { return find_entry(possible, value); }

bool DegreeSet::in_certain(u128 value) const { return find_entry(certain, value) != nullptr; }

bool DegreeSet::divides_some_possible(u128 divisor) const {
  if (divisor == 0) return false;
  return std::any_of(possible.begin(), possible.end(),
                     [&](const DegreeEntry& e) { return e.value % divisor == 0; });
}

std::size_t DegreeSet::nontrivial_possible_count() const {
  return static_cast<std::size_t>(
      std::count_if(possible.begin(), possible.end(), [](const DegreeEntry& e) { return e.value != 1; }));
}

DegreeSet degree_set(const PrimePowerQ& q) {
  if (q.q() < kMinQ) throw DomainError("degree_set: q must be at least 13");
  std::map<u128, DegreeEntry> certain;
  std::map<u128, DegreeEntry> possible;
  std::vector<std::string> audit;
  for (const auto& row : psl4_degree_rows()) {
    const std::string name = format_expr(row.expr);
    const auto& cond = row.condition;
    if (cond.kind == ConditionKind::excluded) {
      audit.push_back(name + ": excluded, table lists it as possible but it is not a degree of PSL4(q)");
      continue;
    }
    if (cond.kind == ConditionKind::possible_unknown) {
      if (row.expr.den == 4 && q.d() != 4) {
        audit.push_back(name + ": excluded, coefficient 1/4 needs d = 4");
        continue;
      }
      try {
        add_entry(possible, evaluate(row.expr, q.q()), row.expr);
      } catch (const NonIntegral&) {
        audit.push_back(name + ": excluded, not integral at q = " + std::to_string(q.q()));
      }
      continue;
    }
    if (!cond.certainly_holds(q)) {
      audit.push_back(name + ": excluded, condition " + cond.describe() + " fails");
      continue;
    }
    u128 value = evaluate(row.expr, q.q());
    add_entry(certain, value, row.expr);
    add_entry(possible, value, row.expr);
  }
  for (const auto& [value, entry] : possible) {
    if (entry.exprs.size() > 1) {
      std::string names;
      for (const auto& x : entry.exprs) names += (names.empty() ? "" : ", ") + format_expr(x);
      audit.push_back("value " + to_string(value) + " shared by " + names);
    }
  }
  return DegreeSet{q, flatten(certain), flatten(possible), std::move(audit)};
}

std::string family_name(Family family) {
  switch (family) {
    case Family::SL4: return "SL4";
    case Family::PSL4: return "PSL4";
    case Family::PGL4: return "PGL4";
    case Family::GL4: return "GL4";
    case Family::SL2: return "SL2";
    case Family::PSL2: return "PSL2";
    case Family::GL2: return "GL2";
    case Family::GU2: return "GU2";
    case Family::SL3: return "SL3";
    case Family::PSL3: return "PSL3";
    case Family::PSU3: return "PSU3";
    case Family::Sp4: return "Sp4";
    case Family::PSp4: return "PSp4";
    case Family::PSU4: return "PSU4";
    case Family::SO3: return "SO3";
    case Family::Sz: return "Sz";
  }
  return "";
}

Factorization cyclotomic_product(const PrimePowerQ& q, unsigned q_power,
                                 const std::vector<std::pair<unsigned, unsigned>>& phi_powers,
                                 u128 divisor) {
  Factorization out = Factorization::prime_power(q.p(), q.f() * q_power);
  for (auto [k, e] : phi_powers) out *= factorize(phi_value(k, q.q())).pow(e);
  if (divisor != 1) out = out.quotient(factorize(divisor));
  return out;
}

Factorization group_order(Family family, const PrimePowerQ& q) {
  switch (family) {
    case Family::SL4:
    case Family::PGL4:
      return cyclotomic_product(q, 6, {{1, 3}, {2, 2}, {3, 1}, {4, 1}});
    case Family::PSL4:
      return cyclotomic_product(q, 6, {{1, 3}, {2, 2}, {3, 1}, {4, 1}}, q.d());
    case Family::GL4:
      return cyclotomic_product(q, 6, {{1, 4}, {2, 2}, {3, 1}, {4, 1}});
    case Family::SL2:
      return cyclotomic_product(q, 1, {{1, 1}, {2, 1}});
    case Family::PSL2:
      return cyclotomic_product(q, 1, {{1, 1}, {2, 1}}, gcd_q_minus_1(q, 2));
    case Family::GL2:
      return cyclotomic_product(q, 1, {{1, 2}, {2, 1}});
    case Family::GU2:
      return cyclotomic_product(q, 1, {{1, 1}, {2, 2}});
    case Family::SL3:
      return cyclotomic_product(q, 3, {{1, 2}, {2, 1}, {3, 1}});
    case Family::PSL3:
      return cyclotomic_product(q, 3, {{1, 2}, {2, 1}, {3, 1}}, gcd_q_minus_1(q, 3));
    case Family::PSU3:
      return cyclotomic_product(q, 3, {{1, 1}, {2, 2}, {6, 1}}, gcd(u128{q.q() + 1}, 3));
    case Family::Sp4:
      return cyclotomic_product(q, 4, {{1, 2}, {2, 2}, {4, 1}});
    case Family::PSp4:
      return cyclotomic_product(q, 4, {{1, 2}, {2, 2}, {4, 1}}, gcd_q_minus_1(q, 2));
    case Family::PSU4:
      return cyclotomic_product(q, 6, {{1, 2}, {2, 3}, {4, 1}, {6, 1}}, gcd(u128{q.q() + 1}, 4));
    case Family::SO3:
      return cyclotomic_product(q, 1, {{1, 1}, {2, 1}});
    case Family::Sz:
      return cyclotomic_product(q, 2, {{1, 1}, {4, 1}});
  }
  throw DomainError("group_order: unsupported family");
}

std::vector<u128> prime_spectrum(Family family, const PrimePowerQ& q) {
  return group_order(family, q).primes();
}

std::string fact_group_name(FactGroup group) {
  switch (group) {
    case FactGroup::PSL4: return "PSL4";
    case FactGroup::SL4: return "SL4";
    case FactGroup::PGL4: return "PGL4";
  }
  return "";
}

std::int64_t QPolynomial::evaluate(std::uint64_t q) const {
  __int128 acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc = acc * static_cast<__int128>(q) + *it;
  }
  if (acc % denominator != 0) throw NonIntegral(text + " is not integral at q = " + std::to_string(q));
  return static_cast<std::int64_t>(acc / denominator);
}

FactSheet sl4_pgl4_facts(const PrimePowerQ& q) {
  const bool mod4_3 = q.q() % 4 == 3;
  const bool mod4_1 = q.q() % 4 == 1;
  const bool odd = q.odd();
  FactSheet sheet;
  auto multiplicity = [&](FactGroup g, const char* x, QPolynomial m, const char* cond, bool applies) {
    MultiplicityFact fact{g, expr(x), std::move(m), cond, applies, std::nullopt};
    if (applies) fact.count = fact.multiplicity.evaluate(q.q());
    sheet.multiplicities.push_back(std::move(fact));
  };
  auto membership = [&](FactGroup g, const char* x, bool member, const char* cond, bool applies) {
    MembershipFact fact{g, expr(x), member, cond, applies, std::nullopt};
    if (applies) fact.value = evaluate(fact.expr, q.q());
    sheet.memberships.push_back(std::move(fact));
  };
  multiplicity(FactGroup::PGL4, "P3*P4", {{-2, 1}, 1, "q - 2"}, "q = 3 mod 4", mod4_3);
  multiplicity(FactGroup::SL4, "P3*P4", {{-3, 1}, 2, "(q - 3)/2"}, "q = 3 mod 4", mod4_3);
  multiplicity(FactGroup::SL4, "1/2*P3*P4", {{2}, 1, "2"}, "q = 3 mod 4", mod4_3);
  multiplicity(FactGroup::PSL4, "1/2*P3*P4", {{2}, 1, "2"}, "q = 3 mod 4", mod4_3);
  multiplicity(FactGroup::PSL4, "1/4*P1^2*P3*P4", {{4}, 1, "4"}, "q = 1 mod 4", mod4_1);
  multiplicity(FactGroup::SL4, "P1^2*P2^2*P4", {{0, -1, 0, 1}, 3, "q(q^2 - 1)/3"}, "any q", true);
  multiplicity(FactGroup::PGL4, "P1^2*P2^2*P4", {{0, -1, 0, 1}, 3, "q(q^2 - 1)/3"}, "any q", true);
  membership(FactGroup::SL4, "1/2*P1*P2*P3*P4", true, "q odd", odd);
  membership(FactGroup::PSL4, "1/2*P1*P2*P3*P4", false, "q odd", odd);
  membership(FactGroup::PGL4, "1/2*P3*P4", false, "q = 3 mod 4", mod4_3);
  return sheet;
}

}  // namespace psl4cd
