#include "psl4cd/lemmas.hpp"

#include <algorithm>
#include <stdexcept>

namespace psl4cd {

namespace {

std::string str(u128 v) { return to_string(v); }

std::string exprs_text(const DegreeEntry& entry) {
  std::string out;
  for (const auto& x : entry.exprs) out += (out.empty() ? "" : " = ") + format_expr(x);
  return out;
}

bool has_expr_in(const DegreeEntry& entry, const std::vector<DegreeExpr>& list) {
  return std::any_of(entry.exprs.begin(), entry.exprs.end(), [&](const DegreeExpr& x) {
    return std::find(list.begin(), list.end(), x) != list.end();
  });
}

std::vector<u128> primitive_primes(std::uint64_t q, unsigned k) {
  auto primes = zsigmondy(q, k).primitives;
  if (primes.empty()) {
    throw std::logic_error("no primitive prime divisor of q^" + std::to_string(k) + " - 1 at q = " +
                           std::to_string(q));
  }
  return primes;
}

std::vector<const DegreeEntry*> nontrivial(const DegreeSet& set) {
  std::vector<const DegreeEntry*> out;
  for (const auto& e : set.possible) {
    if (e.value != 1) out.push_back(&e);
  }
  return out;
}

CheckReport make(const char* id, const DegreeSet& set) {
  CheckReport r;
  r.id = id;
  r.q = set.q.q();
  return r;
}

}  // namespace

const std::vector<DegreeExpr>& coprime_pair_exprs() {
  static const std::vector<DegreeExpr> list = {
      expr("q*P3"),   expr("P1^2*P3"),     expr("1/2*P1^2*P3"),     expr("q^2*P4"),
      expr("q^3*P3"), expr("q^2*P1^2*P3"), expr("1/2*q^2*P1^2*P3"), expr("q^6"),
  };
  return list;
}

const std::vector<DegreeExpr>& power_degree_exprs() {
  static const std::vector<DegreeExpr> list = {
      expr("P2*P4"), expr("q*P2^2*P4"), expr("P1^2*P2^2*P4"), expr("q^6"), expr("q^3*P2*P4"),
  };
  return list;
}

CheckReport check_coprime_degree_is_steinberg(const DegreeSet& set) {
  CheckReport r = make("3.1", set);
  const std::uint64_t q = set.q.q();
  const u128 steinberg = checked_pow(q, 6);
  auto l1s = primitive_primes(q, 3);
  auto l2s = primitive_primes(q, 4);
  std::size_t pairs = 0;
  for (u128 l1 : l1s) {
    for (u128 l2 : l2s) {
      ++pairs;
      std::vector<std::string> coprime;
      for (const auto* e : nontrivial(set)) {
        if (gcd(e->value, l1 * l2) != 1) continue;
        coprime.push_back(str(e->value));
        if (e->value != steinberg) r.fail("degree coprime to l1*l2", {str(l1), str(l2), str(e->value)});
      }
      std::vector<std::string> values = {str(l1), str(l2)};
      values.insert(values.end(), coprime.begin(), coprime.end());
      r.witness("l1, l2, coprime nontrivial degrees", values);
    }
  }
  r.details = std::to_string(pairs) + " primitive prime pair(s) checked against " +
              std::to_string(nontrivial(set).size()) + " nontrivial degrees";
  return r;
}

CheckReport check_maximal_degrees(const DegreeSet& set) {
  CheckReport r = make("3.2", set);
  for (const char* text : {"P1^3*P2*P3", "P1^2*P2^2*P4"}) {
    const u128 target = evaluate(expr(text), set.q.q());
    std::size_t multiples = 0;
    for (const auto& e : set.possible) {
      if (e.value % target != 0) continue;
      ++multiples;
      if (e.value != target) r.fail(std::string("proper multiple of ") + text, {str(target), str(e.value)});
    }
    r.witness(text, {str(target), "multiples " + std::to_string(multiples)});
  }
  r.details = "no possible degree is a proper multiple of P1^3*P2*P3 or P1^2*P2^2*P4";
  if (r.status == Status::fail) r.details = "a possible degree is a proper multiple of a maximal degree";
  return r;
}

CheckReport check_coprime_and_consecutive_pairs(const DegreeSet& set) {
  CheckReport r = make("3.3", set);
  const auto values = nontrivial(set);
  const auto& list = coprime_pair_exprs();
  std::size_t total = 0;
  std::size_t coprime = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      ++total;
      if (gcd(values[i]->value, values[j]->value) != 1) continue;
      ++coprime;
      if (!has_expr_in(*values[i], list) && !has_expr_in(*values[j], list)) {
        r.fail("coprime pair outside the list", {str(values[i]->value), str(values[j]->value)});
      }
    }
  }
  r.witness("nontrivial degrees, pairs, coprime pairs",
            {std::to_string(values.size()), std::to_string(total), std::to_string(coprime)});
  const DegreeExpr lower = expr("q*P3");
  const DegreeExpr upper = expr("P2*P4");
  std::size_t consecutive = 0;
  for (std::size_t i = 0; i + 1 < set.possible.size(); ++i) {
    const auto& a = set.possible[i];
    const auto& b = set.possible[i + 1];
    if (b.value != a.value + 1) continue;
    ++consecutive;
    r.witness("consecutive", {str(a.value), str(b.value), exprs_text(a), exprs_text(b)});
    bool expected = std::count(a.exprs.begin(), a.exprs.end(), lower) != 0 &&
                    std::count(b.exprs.begin(), b.exprs.end(), upper) != 0;
    if (!expected) r.fail("unexpected consecutive pair", {str(a.value), str(b.value)});
  }
  if (consecutive != 1) r.fail("consecutive pair count", {std::to_string(consecutive)});
  r.details = std::to_string(coprime) + " coprime pair(s) of " + std::to_string(total) +
              "; consecutive pairs: " + std::to_string(consecutive);
  return r;
}

CheckReport check_power_degrees(const DegreeSet& set) {
  CheckReport r = make("3.4", set);
  const std::uint64_t q = set.q.q();
  const u128 phi3 = phi_value(3, q);
  std::vector<u128> divisors = {phi3};
  if (phi_value(1, q) % 3 == 0) divisors.push_back(phi3 / 3);
  std::size_t checked = 0;
  std::size_t powers = 0;
  for (const auto* e : nontrivial(set)) {
    auto power = is_perfect_power(e->value);
    for (u128 d : divisors) {
      if (e->value % d != 0) continue;
      ++checked;
      if (power) r.fail("perfect power divisible by " + str(d), {str(e->value)});
    }
    if (!power) continue;
    ++powers;
    r.witness("power degree",
              {str(e->value), str(power->base) + "^" + std::to_string(power->exponent), exprs_text(*e)});
    if (!has_expr_in(*e, power_degree_exprs())) r.fail("power degree outside the list", {str(e->value)});
  }
  if (powers > 5) r.fail("more than five power degrees", {std::to_string(powers)});
  r.details = std::to_string(powers) + " nontrivial power degree(s); " + std::to_string(checked) +
              " divisibility case(s) by P3" + (divisors.size() > 1 ? " or P3/3" : "") + " checked";
  return r;
}

CheckReport check_sl4_half_degree_absent(const DegreeSet& set) {
  CheckReport r = make("3.5", set);
  if (!set.q.odd()) {
    r.status = Status::vacuous;
    r.details = "q even: P1*P2*P3*P4/2 is not integral";
    return r;
  }
  const DegreeExpr half = expr("1/2*P1*P2*P3*P4");
  const u128 value = evaluate(half, set.q.q());
  bool listed = false;
  for (const auto& m : sl4_pgl4_facts(set.q).memberships) {
    if (m.group == FactGroup::SL4 && m.expr == half && m.member && m.applies) listed = true;
  }
  if (!listed) r.fail("missing SL4 membership fact", {str(value)});
  if (set.in_possible(value)) r.fail("value present among possible degrees", {str(value)});
  r.witness("P1*P2*P3*P4/2", {str(value), listed ? "in cd(SL4)" : "not listed", "absent from possible"});
  r.details = "P1*P2*P3*P4/2 = " + str(value) + " is a degree of SL4(q) and not of PSL4(q)";
  return r;
}

CheckReport check_steinberg_arithmetic(const DegreeSet& set) {
  CheckReport r = make("s4", set);
  const std::uint64_t q = set.q.q();
  const u128 steinberg = checked_pow(q, 6);
  std::vector<std::string> prime_powers;
  for (const auto* e : nontrivial(set)) {
    if (factorize_expr(e->exprs.front(), set.q).terms().size() != 1) continue;
    prime_powers.push_back(str(e->value));
    if (e->value != steinberg) r.fail("prime-power degree other than q^6", {str(e->value)});
  }
  r.witness("prime-power degrees", prime_powers);
  const u128 phi3 = phi_value(3, q);
  const u128 phi4 = phi_value(4, q);
  const u128 g34 = gcd(phi3, phi4);
  r.witness("gcd(P3, P4)", {str(phi3), str(phi4), str(g34)});
  if (g34 != 1) r.fail("gcd(P3, P4) != 1", {str(g34)});
  const u128 a = evaluate(expr("P1^3*P2*P3"), q);
  const u128 b = evaluate(expr("P1^2*P2^2*P4"), q);
  const u128 g = gcd(a, b);
  std::vector<std::string> primes;
  for (unsigned k : {3U, 4U}) {
    for (u128 l : primitive_primes(q, k)) {
      primes.push_back(str(l));
      if (g % l == 0) r.fail("gcd of maximal degrees divisible by a primitive prime", {str(g), str(l)});
    }
  }
  r.witness("gcd(P1^3*P2*P3, P1^2*P2^2*P4)", {str(g), factorize(g).to_string()});
  r.witness("primitive primes of P3 and P4", primes);
  r.details = "q^6 is the unique prime-power degree; gcd(P3, P4) = 1; gcd of maximal degrees is " +
              factorize(g).to_string();
  return r;
}

CheckReport check_automorphism_arithmetic(const DegreeSet& set) {
  CheckReport r = make("s6", set);
  const auto& q = set.q;
  const unsigned f = q.f();
  if (f == 1) {
    r.witness("field exponents b", {"none (f = 1)"});
  } else {
    auto z4 = zsigmondy(q.p(), 4 * f);
    if (!z4.smallest) {
      r.fail("no primitive prime of p^{4f} - 1", {std::to_string(q.p()), std::to_string(4 * f)});
    } else {
      const u128 l = *z4.smallest;
      for (unsigned b = 1; b < f; ++b) {
        const auto sub = PrimePowerQ::from(checked_pow(q.p(), b));
        const auto order = group_order(Family::PGL4, sub);
        const bool divides = order.exponent_of(l) != 0;
        r.witness("b, primitive prime of p^{4f} - 1, divides |PGL4(p^b)|",
                  {std::to_string(b), str(l), divides ? "yes" : "no"});
        if (divides) r.fail("primitive prime divides |PGL4(p^b)|", {std::to_string(b), str(l)});
      }
    }
  }
  CheckReport maximal = check_maximal_degrees(set);
  r.witness("no proper multiples of maximal degrees", {status_name(maximal.status)});
  for (const auto& w : maximal.witnesses) {
    if (w.label.rfind("counterexample", 0) == 0) r.fail(w.label.substr(16), w.values);
  }
  auto z3 = zsigmondy(q.p(), 3 * f);
  if (z3.smallest) {
    r.witness("primitive prime of p^{3f} - 1", {str(*z3.smallest)});
  } else {
    r.fail("no primitive prime of p^{3f} - 1", {std::to_string(q.p()), std::to_string(3 * f)});
  }
  r.details = f == 1 ? "field-automorphism part vacuous (f = 1); remaining parts hold"
                     : "primitive prime of p^{4f} - 1 misses every proper subfield PGL4; remaining parts hold";
  if (r.status == Status::fail) r.details = "automorphism arithmetic fails";
  return r;
}

}  // namespace psl4cd
