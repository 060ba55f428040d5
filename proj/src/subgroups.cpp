#include "psl4cd/subgroups.hpp"

#include <algorithm>
#include <set>

namespace psl4cd {

namespace {

using Bindings = std::vector<FieldBinding>;
using PhiPowers = std::vector<std::pair<unsigned, unsigned>>;

Bindings when(bool condition) { return condition ? Bindings{FieldBinding{}} : Bindings{}; }

// q = q0^b with b prime.
Bindings subfields(const PrimePowerQ& q) {
  Bindings out;
  for (unsigned b = 2; b <= q.f(); ++b) {
    if (q.f() % b == 0 && is_prime(b)) {
      out.push_back({static_cast<std::uint64_t>(checked_pow(q.p(), q.f() / b)), b});
    }
  }
  return out;
}

// q = q0^2.
Bindings square_root(const PrimePowerQ& q) {
  if (q.f() % 2 != 0) return {};
  return {{static_cast<std::uint64_t>(checked_pow(q.p(), q.f() / 2)), 2}};
}

bool prime_field(const PrimePowerQ& q) { return q.f() == 1; }

bool residue_in(std::uint64_t value, std::uint64_t modulus, std::initializer_list<std::uint64_t> residues) {
  return std::find(residues.begin(), residues.end(), value % modulus) != residues.end();
}

u128 gcd_q_minus_1(const PrimePowerQ& q, u128 n) { return gcd(u128{q.q() - 1}, n); }

Factorization product(const PrimePowerQ& q, unsigned q_power, const PhiPowers& phis, u128 divisor = 1) {
  return cyclotomic_product(q, q_power, phis, divisor);
}

// |ambient(q)| / subgroup order.
Factorization quotient(Family ambient, const PrimePowerQ& q, const Factorization& subgroup) {
  return group_order(ambient, q).quotient(subgroup);
}

Factorization constant(u128 n) { return factorize(n); }

PrimePowerQ sub(const FieldBinding& b) { return PrimePowerQ::from(b.q0); }

// |PSL4(q0).c : PSL4(q0)| inside PSL4(q): the classes of PGL4(q0) whose
// determinant is a fourth power in F_q, so c = |F_q0* cap (F_q*)^4| / |(F_q0*)^4|.
// Equals (q0 - 1, 4) except when (q - 1)/(q0 - 1) has fewer factors of 2.
u128 psl4_subfield_extension(const PrimePowerQ& q, const PrimePowerQ& q0) {
  const u128 q0_units = q0.q() - 1;
  const u128 fourth_powers = (q.q() - 1) / q.d();
  return gcd(q0_units, fourth_powers) / (q0_units / q0.d());
}

std::vector<MaxSubgroupRow> psl4_rows() {
  const Ambient A = Ambient::PSL4;
  auto always = [](const PrimePowerQ&) { return when(true); };
  return {
      {A, "P_a", "^[q^3]:GL3(q)", "any q", "P2*P4", always,
       [](const PrimePowerQ& q, const FieldBinding&) { return product(q, 0, {{2, 1}, {4, 1}}); }},
      {A, "P_b", "^[q^4]:(SL2(q) x SL2(q)).Z_{q-1}", "any q", "P3*P4", always,
       [](const PrimePowerQ& q, const FieldBinding&) { return product(q, 0, {{3, 1}, {4, 1}}); }},
      {A, "T.S4", "^(Z_{q-1})^3.S4", "q >= 5", "q^6*P2^2*P3*P4/24",
       [](const PrimePowerQ& q) { return when(q.q() >= 5); },
       [](const PrimePowerQ& q, const FieldBinding&) {
         return product(q, 6, {{2, 2}, {3, 1}, {4, 1}}, 24);
       }},
      {A, "SL2wrS2", "^(SL2(q) x SL2(q)).Z_{q-1}.2", "q >= 4", "q^4*P3*P4/2",
       [](const PrimePowerQ& q) { return when(q.q() >= 4); },
       [](const PrimePowerQ& q, const FieldBinding&) { return product(q, 4, {{3, 1}, {4, 1}}, 2); }},
      {A, "PSL2(q^2)", "(PSL2(q^2) x Z_{q+1}).2", "any q", "q^4*P1^2*P3*(q-1,2)/(2d)", always,
       [](const PrimePowerQ& q, const FieldBinding&) {
         return (product(q, 4, {{1, 2}, {3, 1}}) * constant(gcd_q_minus_1(q, 2))).quotient(constant(2 * q.d()));
       }},
      {A, "PSL4(q0)", "PSL4(q0).c", "q = q0^b, b prime", "|PSL4(q)|/(c|PSL4(q0)|), c = |F_q0* cap (F_q*)^4 : (F_q0*)^4|", subfields,
       [](const PrimePowerQ& q, const FieldBinding& b) {
         auto q0 = sub(b);
         return quotient(Family::PSL4, q, group_order(Family::PSL4, q0) * constant(psl4_subfield_extension(q, q0)));
       }},
      {A, "2^4.S6", "2^4.S6", "q = p = 1 mod 8", "|PSL4(q)|/11520",
       [](const PrimePowerQ& q) { return when(prime_field(q) && q.q() % 8 == 1); },
       [](const PrimePowerQ& q, const FieldBinding&) { return quotient(Family::PSL4, q, constant(11520)); }},
      {A, "2^4.A6", "2^4.A6", "q = p = 5 mod 8", "|PSL4(q)|/5760",
       [](const PrimePowerQ& q) { return when(prime_field(q) && q.q() % 8 == 5); },
       [](const PrimePowerQ& q, const FieldBinding&) { return quotient(Family::PSL4, q, constant(5760)); }},
      {A, "Sp4", "^Sp4(q).(q-1,2)", "any q", "q^2*P1*P3/(q-1,2)", always,
       [](const PrimePowerQ& q, const FieldBinding&) {
         return product(q, 2, {{1, 1}, {3, 1}}, gcd_q_minus_1(q, 2));
       }},
      {A, "PSO4+", "PSO4+(q).2", "q odd", "q^4*P1*P3*P4/d",
       [](const PrimePowerQ& q) { return when(q.odd()); },
       [](const PrimePowerQ& q, const FieldBinding&) { return product(q, 4, {{1, 1}, {3, 1}, {4, 1}}, q.d()); }},
      {A, "PSO4-", "PSO4-(q).2", "q odd", "q^4*P1^2*P2*P3/d",
       [](const PrimePowerQ& q) { return when(q.odd()); },
       [](const PrimePowerQ& q, const FieldBinding&) { return product(q, 4, {{1, 2}, {2, 1}, {3, 1}}, q.d()); }},
      {A, "PSU4(q0)", "PSU4(q0).(q-1,2)", "q = q0^2", "|PSL4(q)|/((q-1,2)|PSU4(q0)|)", square_root,
       [](const PrimePowerQ& q, const FieldBinding& b) {
         return quotient(Family::PSL4, q, group_order(Family::PSU4, sub(b)) * constant(gcd_q_minus_1(q, 2)));
       }},
      {A, "A7", "A7", "q = p = 1, 2, 4 mod 7", "|PSL4(q)|/2520",
       [](const PrimePowerQ& q) { return when(prime_field(q) && residue_in(q.q(), 7, {1, 2, 4})); },
       [](const PrimePowerQ& q, const FieldBinding&) { return quotient(Family::PSL4, q, constant(2520)); }},
      {A, "PSU4(2)", "PSU4(2)", "q = p = 1 mod 6", "|PSL4(q)|/25920",
       [](const PrimePowerQ& q) { return when(prime_field(q) && q.q() % 6 == 1); },
       [](const PrimePowerQ& q, const FieldBinding&) { return quotient(Family::PSL4, q, constant(25920)); }},
  };
}

std::vector<MaxSubgroupRow> psl2_rows() {
  const Ambient A = Ambient::PSL2;
  auto psl2_over = [](u128 order) {
    return [order](const PrimePowerQ& q, const FieldBinding&) {
      return quotient(Family::PSL2, q, constant(order));
    };
  };
  return {
      {A, "D(q-1)", "D_{q-1}", "q >= 13 odd", "q*P2/2",
       [](const PrimePowerQ& q) { return when(q.odd() && q.q() >= 13); },
       [](const PrimePowerQ& q, const FieldBinding&) { return product(q, 1, {{2, 1}}, 2); }},
      {A, "D2(q-1)", "D_{2(q-1)}", "q even", "q*P2/2",
       [](const PrimePowerQ& q) { return when(!q.odd()); },
       [](const PrimePowerQ& q, const FieldBinding&) { return product(q, 1, {{2, 1}}, 2); }},
      {A, "D(q+1)", "D_{q+1}", "q odd, q != 7, 9", "q*P1/2",
       [](const PrimePowerQ& q) { return when(q.odd() && q.q() != 7 && q.q() != 9); },
       [](const PrimePowerQ& q, const FieldBinding&) { return product(q, 1, {{1, 1}}, 2); }},
      {A, "D2(q+1)", "D_{2(q+1)}", "q even", "q*P1/2",
       [](const PrimePowerQ& q) { return when(!q.odd()); },
       [](const PrimePowerQ& q, const FieldBinding&) { return product(q, 1, {{1, 1}}, 2); }},
      {A, "Borel", "[q]:Z_{(q-1)/(2,q-1)}", "any q", "P2",
       [](const PrimePowerQ&) { return when(true); },
       [](const PrimePowerQ& q, const FieldBinding&) { return product(q, 0, {{2, 1}}); }},
      {A, "PSL2(q0)", "PSL2(q0).(2,b)", "q = q0^b, b prime", "|PSL2(q)|/(|PSL2(q0)|(2,b)), (2,b) for odd q",
       subfields,
       [](const PrimePowerQ& q, const FieldBinding& b) {
         u128 extension = q.odd() ? gcd(u128{b.b}, 2) : 1;
         return quotient(Family::PSL2, q, group_order(Family::PSL2, sub(b)) * constant(extension));
       }},
      {A, "S4", "S4", "q = p = +-1 mod 8, or q = p^2 with 3 < p = +-3 mod 10", "|PSL2(q)|/24",
       [](const PrimePowerQ& q) {
         return when((prime_field(q) && residue_in(q.q(), 8, {1, 7})) ||
                     (q.f() == 2 && q.p() > 3 && residue_in(q.p(), 10, {3, 7})));
       },
       psl2_over(24)},
      {A, "A4", "A4", "q = p = +-3 mod 8, q > 3", "|PSL2(q)|/12",
       [](const PrimePowerQ& q) { return when(prime_field(q) && q.q() > 3 && residue_in(q.q(), 8, {3, 5})); },
       psl2_over(12)},
      {A, "A5", "A5", "q = p = +-1 mod 10, or q = p^2 with p = +-3 mod 10", "|PSL2(q)|/60",
       [](const PrimePowerQ& q) {
         return when((prime_field(q) && residue_in(q.q(), 10, {1, 9})) ||
                     (q.f() == 2 && residue_in(q.p(), 10, {3, 7})));
       },
       psl2_over(60)},
  };
}

std::vector<MaxSubgroupRow> psl3_rows() {
  const Ambient A = Ambient::PSL3;
  auto psl3_over = [](u128 order) {
    return [order](const PrimePowerQ& q, const FieldBinding&) {
      return quotient(Family::PSL3, q, constant(order));
    };
  };
  return {
      {A, "P", "^[q^2]:GL2(q)", "any q", "|SL3(q)|/(q^2|GL2(q)|)",
       [](const PrimePowerQ&) { return when(true); },
       [](const PrimePowerQ& q, const FieldBinding&) {
         return quotient(Family::SL3, q, product(q, 2, {}) * group_order(Family::GL2, q));
       }},
      {A, "T.S3", "^(Z_{q-1})^2.S3", "q >= 5", "|SL3(q)|/(6(q-1)^2)",
       [](const PrimePowerQ& q) { return when(q.q() >= 5); },
       [](const PrimePowerQ& q, const FieldBinding&) {
         return quotient(Family::SL3, q, product(q, 0, {{1, 2}}) * constant(6));
       }},
      {A, "Z.3", "^Z_{q^2+q+1}.3", "q != 4", "|SL3(q)|/(3(q^2+q+1))",
       [](const PrimePowerQ& q) { return when(q.q() != 4); },
       [](const PrimePowerQ& q, const FieldBinding&) {
         return quotient(Family::SL3, q, product(q, 0, {{3, 1}}) * constant(3));
       }},
      {A, "PSL3(q0)", "PSL3(q0).((q-1,3),b)", "q = q0^b, b prime", "|PSL3(q)|/(|PSL3(q0)|((q-1,3),b))",
       subfields,
       [](const PrimePowerQ& q, const FieldBinding& b) {
         u128 extension = gcd(gcd_q_minus_1(q, 3), u128{b.b});
         return quotient(Family::PSL3, q, group_order(Family::PSL3, sub(b)) * constant(extension));
       }},
      {A, "3^2.SL2(3)", "3^2.SL2(3)", "q = p = 1 mod 9", "|PSL3(q)|/216",
       [](const PrimePowerQ& q) { return when(prime_field(q) && q.q() % 9 == 1); }, psl3_over(216)},
      {A, "3^2.Q8", "3^2.Q8", "q = p = 4, 7 mod 9", "|PSL3(q)|/72",
       [](const PrimePowerQ& q) { return when(prime_field(q) && residue_in(q.q(), 9, {4, 7})); }, psl3_over(72)},
      {A, "SO3", "SO3(q)", "q odd", "|PSL3(q)|/|SO3(q)|",
       [](const PrimePowerQ& q) { return when(q.odd()); },
       [](const PrimePowerQ& q, const FieldBinding&) {
         return quotient(Family::PSL3, q, group_order(Family::SO3, q));
       }},
      {A, "PSU3(q0)", "PSU3(q0)", "q = q0^2", "|PSL3(q)|/|PSU3(q0)|", square_root,
       [](const PrimePowerQ& q, const FieldBinding& b) {
         return quotient(Family::PSL3, q, group_order(Family::PSU3, sub(b)));
       }},
      {A, "A6", "A6", "q = p = 1, 4 mod 15, or q = p^2 with p = 2, 7, 8, 13 mod 15", "|PSL3(q)|/360",
       [](const PrimePowerQ& q) {
         return when((prime_field(q) && residue_in(q.q(), 15, {1, 4})) ||
                     (q.f() == 2 && residue_in(q.p(), 15, {2, 7, 8, 13})));
       },
       psl3_over(360)},
      {A, "PSL2(7)", "PSL2(7)", "2 < q = p = 1, 2, 4 mod 7", "|PSL3(q)|/168",
       [](const PrimePowerQ& q) { return when(prime_field(q) && q.q() > 2 && residue_in(q.q(), 7, {1, 2, 4})); },
       psl3_over(168)},
  };
}

std::vector<MaxSubgroupRow> psp4_rows() {
  const Ambient A = Ambient::PSp4;
  auto psp4_over = [](u128 order) {
    return [order](const PrimePowerQ& q, const FieldBinding&) {
      return quotient(Family::PSp4, q, constant(order));
    };
  };
  return {
      {A, "P1", "^[q^3]:(Z_{q-1} o Sp2(q))", "any q", "|Sp4(q)|/(q^3(q-1)|Sp2(q)|)",
       [](const PrimePowerQ&) { return when(true); },
       [](const PrimePowerQ& q, const FieldBinding&) {
         return quotient(Family::Sp4, q, product(q, 3, {{1, 1}}) * group_order(Family::SL2, q));
       }},
      {A, "P2", "^[q^3]:GL2(q)", "any q", "|Sp4(q)|/(q^3|GL2(q)|)",
       [](const PrimePowerQ&) { return when(true); },
       [](const PrimePowerQ& q, const FieldBinding&) {
         return quotient(Family::Sp4, q, product(q, 3, {}) * group_order(Family::GL2, q));
       }},
      {A, "Sp2oSp2.2", "(Sp2(q) o Sp2(q)).2", "q >= 3", "|Sp4(q)|/(2|Sp2(q)|^2)",
       [](const PrimePowerQ& q) { return when(q.q() >= 3); },
       [](const PrimePowerQ& q, const FieldBinding&) {
         return quotient(Family::Sp4, q, group_order(Family::SL2, q).pow(2) * constant(2));
       }},
      {A, "GU2.2", "^GU2(q).2", "q odd, q >= 5", "|Sp4(q)|/(2|GU2(q)|)",
       [](const PrimePowerQ& q) { return when(q.odd() && q.q() >= 5); },
       [](const PrimePowerQ& q, const FieldBinding&) {
         return quotient(Family::Sp4, q, group_order(Family::GU2, q) * constant(2));
       }},
      {A, "PSp2(q^2).2", "PSp2(q^2).2", "any q", "|Sp4(q)|/(2|Sp2(q^2)|)",
       [](const PrimePowerQ&) { return when(true); },
       [](const PrimePowerQ& q, const FieldBinding&) {
         // |Sp2(q^2)| = q^2 (q^4 - 1)
         return quotient(Family::Sp4, q, product(q, 2, {{1, 1}, {2, 1}, {4, 1}}) * constant(2));
       }},
      {A, "GL2.2", "^GL2(q).2", "q odd, q >= 5", "|Sp4(q)|/(2|GL2(q)|)",
       [](const PrimePowerQ& q) { return when(q.odd() && q.q() >= 5); },
       [](const PrimePowerQ& q, const FieldBinding&) {
         return quotient(Family::Sp4, q, group_order(Family::GL2, q) * constant(2));
       }},
      {A, "PSp4(q0)", "PSp4(q0).(b,(q-1,2))", "q = q0^b, b prime", "|PSp4(q)|/(|PSp4(q0)|(b,(q-1,2)))",
       subfields,
       [](const PrimePowerQ& q, const FieldBinding& b) {
         u128 extension = gcd(u128{b.b}, gcd_q_minus_1(q, 2));
         return quotient(Family::PSp4, q, group_order(Family::PSp4, sub(b)) * constant(extension));
       }},
      {A, "2^4.Omega4-(2)", "2^4.Omega4-(2)", "q = p = +-3 mod 8", "|PSp4(q)|/960",
       [](const PrimePowerQ& q) { return when(prime_field(q) && residue_in(q.q(), 8, {3, 5})); }, psp4_over(960)},
      {A, "2^4.O4-(2)", "2^4.O4-(2)", "q = p = +-1 mod 8", "|PSp4(q)|/1920",
       [](const PrimePowerQ& q) { return when(prime_field(q) && residue_in(q.q(), 8, {1, 7})); }, psp4_over(1920)},
      {A, "O4+", "O4+(q)", "q even", "|Sp4(q)|/(2q^2(q^2-1)^2)",
       [](const PrimePowerQ& q) { return when(!q.odd()); },
       [](const PrimePowerQ& q, const FieldBinding&) {
         return quotient(Family::Sp4, q, product(q, 2, {{1, 2}, {2, 2}}) * constant(2));
       }},
      {A, "O4-", "O4-(q)", "q even", "|Sp4(q)|/(2q^2(q^4-1))",
       [](const PrimePowerQ& q) { return when(!q.odd()); },
       [](const PrimePowerQ& q, const FieldBinding&) {
         return quotient(Family::Sp4, q, product(q, 2, {{1, 1}, {2, 1}, {4, 1}}) * constant(2));
       }},
      {A, "Sz", "Sz(q)", "q >= 8 even, f odd", "|Sp4(q)|/|Sz(q)|",
       [](const PrimePowerQ& q) { return when(!q.odd() && q.q() >= 8 && q.f() % 2 == 1); },
       [](const PrimePowerQ& q, const FieldBinding&) { return quotient(Family::Sp4, q, group_order(Family::Sz, q)); }},
      {A, "PSL2", "PSL2(q)", "p >= 5, q >= 7", "|PSp4(q)|/|PSL2(q)|",
       [](const PrimePowerQ& q) { return when(q.p() >= 5 && q.q() >= 7); },
       [](const PrimePowerQ& q, const FieldBinding&) {
         return quotient(Family::PSp4, q, group_order(Family::PSL2, q));
       }},
      {A, "S6", "S6", "q = p = +-1 mod 12", "|PSp4(q)|/720",
       [](const PrimePowerQ& q) { return when(prime_field(q) && residue_in(q.q(), 12, {1, 11})); }, psp4_over(720)},
      {A, "A6", "A6", "q = p = 2, +-5 mod 12", "|PSp4(q)|/360",
       [](const PrimePowerQ& q) { return when(prime_field(q) && residue_in(q.q(), 12, {2, 5, 7})); },
       psp4_over(360)},
  };
}

std::string str(u128 v) { return to_string(v); }

std::string index_text(const Factorization& f) { return to_string(f.big_value()); }

CheckReport make(const char* id, std::uint64_t q) {
  CheckReport r;
  r.id = id;
  r.q = q;
  return r;
}

std::vector<std::string> strs(const std::vector<u128>& values) {
  std::vector<std::string> out;
  for (u128 v : values) out.push_back(str(v));
  return out;
}

// Value when it fits in 128 bits; indices that do not fit divide no degree.
std::optional<u128> small_value(const Factorization& f) { return f.value(); }

}  // namespace

std::string ambient_name(Ambient ambient) {
  switch (ambient) {
    case Ambient::PSL4: return "PSL4";
    case Ambient::PSL2: return "PSL2";
    case Ambient::PSL3: return "PSL3";
    case Ambient::PSp4: return "PSp4";
  }
  return "";
}

std::string AppliedRow::label() const {
  if (binding.b == 0) return row->id;
  return row->id + "[q0=" + std::to_string(binding.q0) + ",b=" + std::to_string(binding.b) + "]";
}

const std::vector<MaxSubgroupRow>& subgroup_rows(Ambient ambient) {
  static const std::vector<MaxSubgroupRow> psl4 = psl4_rows();
  static const std::vector<MaxSubgroupRow> psl2 = psl2_rows();
  static const std::vector<MaxSubgroupRow> psl3 = psl3_rows();
  static const std::vector<MaxSubgroupRow> psp4 = psp4_rows();
  switch (ambient) {
    case Ambient::PSL4: return psl4;
    case Ambient::PSL2: return psl2;
    case Ambient::PSL3: return psl3;
    case Ambient::PSp4: return psp4;
  }
  return psl4;
}

std::vector<AppliedRow> maximal_subgroups(Ambient ambient, const PrimePowerQ& q) {
  std::vector<AppliedRow> out;
  for (const auto& row : subgroup_rows(ambient)) {
    for (const auto& b : row.bindings(q)) out.push_back({&row, b});
  }
  return out;
}

Factorization index_value(const AppliedRow& row, const PrimePowerQ& q) {
  return row.row->index(q, row.binding);
}

std::vector<u128> divisibility_maxima(std::vector<u128> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<u128> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = i + 1; j < values.size() && !dominated; ++j) dominated = values[j] % values[i] == 0;
    if (!dominated) out.push_back(values[i]);
  }
  return out;
}

std::vector<u128> expected_menu(const std::string& row_id, const PrimePowerQ& q) {
  const std::uint64_t qv = q.q();
  auto v = [&](const char* text) { return evaluate(expr(text), qv); };
  if (row_id == "P_a") {
    return divisibility_maxima({v("q*P2"), v("P1^2*P2"), v("P1*P3"), v("q*P3"), v("q^3"), v("P2*P3")});
  }
  if (row_id == "Sp4") return {gcd(u128{qv - 1}, 2) * v("P1")};
  if (row_id == "P_b") {
    return divisibility_maxima({v("q*P1"), v("P1^2"), v("q*P2"), v("P2^2"), v("P1*P2"), v("q^2")});
  }
  return {};
}

FilterOutcome filter_psl4_subgroups(const DegreeSet& set) {
  FilterOutcome out;
  out.q = set.q.q();
  for (const auto& applied : maximal_subgroups(Ambient::PSL4, set.q)) {
    const Factorization index = index_value(applied, set.q);
    const auto value = small_value(index);
    std::vector<u128> quotients;
    if (value) {
      for (const auto& e : set.possible) {
        if (e.value % *value == 0) quotients.push_back(e.value / *value);
      }
    }
    if (quotients.empty()) {
      out.eliminated.push_back({applied.label(), index_text(index), "index divides no possible degree"});
      continue;
    }
    SurvivingRow row;
    row.id = applied.label();
    row.index = *value;
    row.menu = divisibility_maxima(quotients);
    row.expected = expected_menu(row.id, set.q);
    row.expected_name = row.id == "P_a" ? "A1" : row.id == "P_b" ? "A2" : row.id == "Sp4" ? "(2,q-1)P1" : "none";
    row.matches = !row.expected.empty() && row.menu == row.expected;
    out.surviving.push_back(std::move(row));
  }
  return out;
}

CheckReport check_psl4_subgroup_filter(const DegreeSet& set) {
  CheckReport r = make("7.1", set.q.q());
  const FilterOutcome outcome = filter_psl4_subgroups(set);
  std::set<std::string> survivors;
  for (const auto& s : outcome.surviving) {
    survivors.insert(s.id);
    std::vector<std::string> values = {str(s.index), s.expected_name};
    for (u128 m : s.menu) values.push_back(str(m));
    r.witness("survivor " + s.id + ": index, menu, maxima", values);
    if (!s.matches) {
      std::vector<std::string> detail = {"menu"};
      for (u128 m : s.menu) detail.push_back(str(m));
      detail.push_back("expected");
      for (u128 m : s.expected) detail.push_back(str(m));
      r.fail("menu mismatch for " + s.id, detail);
    }
  }
  for (const auto& e : outcome.eliminated) r.witness("eliminated " + e.id, {e.index, e.reason});
  const std::set<std::string> expected = {"P_a", "P_b", "Sp4"};
  if (survivors != expected) {
    r.fail("survivor set", std::vector<std::string>(survivors.begin(), survivors.end()));
  }
  r.details = std::to_string(outcome.surviving.size()) + " surviving row(s), " +
              std::to_string(outcome.eliminated.size()) + " eliminated";
  return r;
}

CheckReport check_psl2_subgroup_indices(const PrimePowerQ& q) {
  CheckReport r = make("7.2", q.q());
  const u128 phi1 = phi_value(1, q.q());
  const u128 phi2 = phi_value(2, q.q());
  const u128 qv = q.q();
  bool borel_ok = false;
  std::optional<BigNat> smallest;
  for (const auto& applied : maximal_subgroups(Ambient::PSL2, q)) {
    const Factorization index = index_value(applied, q);
    const BigNat big = index.big_value();
    if (!smallest || big < *smallest) smallest = big;
    r.witness(applied.label(), {index_text(index)});
    if (applied.row->id == "Borel") {
      borel_ok = index.value() == phi2;
      if (!borel_ok) r.fail("Borel index is not P2", {index_text(index)});
      continue;
    }
    const auto value = index.value();
    for (u128 target : {phi1, phi2, qv}) {
      if (value && target % *value == 0) {
        r.fail("index divides P1, P2 or q", {applied.label(), str(*value), str(target)});
      }
    }
  }
  if (!borel_ok) r.fail("Borel row missing", {});
  if (!smallest || *smallest < to_big(phi2)) {
    r.fail("index smaller than P2", {smallest ? to_string(*smallest) : "none", str(phi2)});
  }
  r.details = "only the Borel subgroup has index dividing P1, P2 or q; smallest index " +
              (smallest ? to_string(*smallest) : std::string("none")) + " = P2";
  return r;
}

CheckReport check_psl3_subgroup_indices(const PrimePowerQ& q) {
  CheckReport r = make("7.3", q.q());
  const std::uint64_t qv = q.q();
  std::vector<u128> members;
  for (const char* text : {"q*P2", "P1^2*P2", "P1*P3", "q*P3", "q^3", "P2*P3"}) {
    members.push_back(evaluate(expr(text), qv));
  }
  r.witness("A1", strs(members));
  std::size_t hits = 0;
  for (const auto& applied : maximal_subgroups(Ambient::PSL3, q)) {
    const Factorization index = index_value(applied, q);
    const auto value = index.value();
    std::optional<u128> member;
    if (value) {
      for (u128 m : members) {
        if (m % *value == 0) {
          member = m;
          break;
        }
      }
    }
    r.witness(applied.label(), {index_text(index), member ? "divides " + str(*member) : "divides no member"});
    if (!member) continue;
    ++hits;
    if (applied.row->id != "P") {
      r.fail("non-parabolic index divides a member", {applied.label(), str(*value), str(*member)});
    } else if (*value != phi_value(3, qv)) {
      r.fail("parabolic index is not P3", {str(*value)});
    }
  }
  if (hits == 0) r.fail("parabolic index divides no member", {});
  r.details = "only [q^2]:GL2(q) has index dividing a member of A1; its index is P3 = " +
              str(phi_value(3, qv));
  return r;
}

CheckReport check_psp4_subgroup_indices(const PrimePowerQ& q) {
  CheckReport r = make("7.4", q.q());
  const u128 bound = 2 * phi_value(1, q.q());
  const u128 phi4 = phi_value(4, q.q());
  std::optional<BigNat> smallest;
  for (const auto& applied : maximal_subgroups(Ambient::PSp4, q)) {
    const Factorization index = index_value(applied, q);
    const BigNat big = index.big_value();
    if (!smallest || big < *smallest) smallest = big;
    r.witness(applied.label(), {index_text(index)});
    if (big <= to_big(bound)) r.fail("index at most 2P1", {applied.label(), index_text(index), str(bound)});
  }
  if (phi4 <= bound) r.fail("P4 <= 2P1", {str(phi4), str(bound)});
  const std::string min_text = smallest ? to_string(*smallest) : "none";
  r.witness("smallest index, 2P1", {min_text, str(bound)});
  r.witness("P4 > 2P1", {str(phi4), str(bound)});
  const bool equals_phi4 = smallest && *smallest == to_big(phi4);
  r.witness("informational: smallest index equals P4", {min_text, str(phi4), equals_phi4 ? "yes" : "no"});
  r.details = "smallest index " + min_text + " exceeds 2P1 = " + str(bound);
  if (!equals_phi4) r.details += "; smallest index differs from P4 = " + str(phi4) + " (informational)";
  return r;
}

std::vector<std::string> dump_subgroup_rows() {
  std::vector<std::string> out;
  for (Ambient a : {Ambient::PSL4, Ambient::PSL2, Ambient::PSL3, Ambient::PSp4}) {
    for (const auto& row : subgroup_rows(a)) {
      out.push_back(ambient_name(a) + "\t" + row.id + "\t" + row.structure + "\t" + row.condition + "\t" +
                    row.index_source);
    }
  }
  return out;
}

}  // namespace psl4cd
