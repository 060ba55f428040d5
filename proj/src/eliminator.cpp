#include "psl4cd/eliminator.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace psl4cd {

namespace {

// Every sporadic group has at least six distinct nontrivial
// extendable degrees.
constexpr std::size_t kSporadicExtendableDegrees = 6;

std::string str(u128 v) { return to_string(v); }

std::string kv(const std::string& key, u128 v) { return key + "=" + str(v); }

std::string kv(const std::string& key, const std::string& v) { return key + "=" + v; }

std::string field_text(std::uint64_t p, unsigned b) {
  return b == 1 ? std::to_string(p) : std::to_string(p) + "^" + std::to_string(b);
}

u128 field_order(std::uint64_t p, unsigned b) { return checked_pow(p, b); }

// Divisors of n that are at least `from`, ascending.
std::vector<unsigned> divisors_from(unsigned n, unsigned from) {
  std::vector<unsigned> out;
  for (unsigned d = from; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

u128 smallest_nontrivial(const DegreeSet& set) {
  for (const auto& e : set.possible) {
    if (e.value != 1) return e.value;
  }
  return 0;
}

// x^k, or nullopt when it does not fit in 128 bits.
std::optional<u128> try_pow(u128 x, unsigned k) {
  try {
    return checked_pow(x, k);
  } catch (const OverflowError&) {
    return std::nullopt;
  }
}

bool in_possible(const DegreeSet& set, std::optional<u128> v) { return v && set.in_possible(*v); }

// n >= 7 with n^2 - 3n + c = 2t, from the discriminant 9 - 4c + 8t.
struct QuadraticRoot {
  u128 discriminant = 0;
  u128 floor_root = 0;
  std::optional<u128> n;
};

QuadraticRoot solve_triangular(u128 t, u128 shift) {
  QuadraticRoot out;
  out.discriminant = checked_add(checked_mul(8, t), shift);
  out.floor_root = integer_root(out.discriminant, 2);
  if (out.floor_root * out.floor_root == out.discriminant && (out.floor_root + 3) % 2 == 0) {
    u128 n = (out.floor_root + 3) / 2;
    if (n >= 7) out.n = n;
  }
  return out;
}

TraceEntry make_entry(const LieCandidate& c, std::uint64_t p) {
  TraceEntry e;
  e.candidate = c.name(p);
  e.category = is_classical(c.family) ? "classical" : "exceptional";
  e.k = c.k;
  e.lie = c;
  return e;
}

void eliminate(TraceEntry& e, std::string rule, std::vector<std::string> witness) {
  e.survived = false;
  e.rule = std::move(rule);
  e.witness = std::move(witness);
}

void survive(TraceEntry& e, std::string rule, std::vector<std::string> witness) {
  e.survived = true;
  e.rule = std::move(rule);
  e.witness = std::move(witness);
}

// Eliminates when `value` divides no possible degree.
void divides_none(TraceEntry& e, const DegreeSet& set, const std::string& label, u128 value) {
  if (!set.divides_some_possible(value)) {
    eliminate(e, "character degree " + label + " divides no degree", {kv(label, value)});
  } else {
    survive(e, "no elimination: " + label + " divides a degree", {kv(label, value)});
  }
}

// Eliminates when `value` is not a possible degree.
void not_a_degree(TraceEntry& e, const DegreeSet& set, const std::string& label, u128 value) {
  if (!set.in_possible(value)) {
    eliminate(e, "extendable degree " + label + " is not a degree", {kv(label, value)});
  } else {
    survive(e, "no elimination: " + label + " is a degree", {kv(label, value)});
  }
}

void final_check(TraceEntry& e, const DegreeSet& set, const LieCandidate& c) {
  const PrimePowerQ& q = set.q;
  const std::uint64_t p = q.p();
  const u128 q1 = field_order(p, c.b);
  auto phi = [&](unsigned k) { return phi_value(k, q1); };
  switch (c.family) {
    case LieFamily::PSL:
    case LieFamily::PSU: {
      const bool plus = c.family == LieFamily::PSL;
      if (c.n == 2) return divides_none(e, set, "q1+1", q1 + 1);
      if (c.n == 3) {
        const u128 v = plus ? checked_mul(checked_pow(q1 - 1, 2), q1 + 1) : checked_mul(checked_pow(q1 + 1, 2), q1 - 1);
        const std::string label = plus ? "(q1-1)^2(q1+1)" : "(q1+1)^2(q1-1)";
        divides_none(e, set, label, v);
        if (e.survived && plus) {
          // At q1 = q^2, (q1-1)^2(q1+1) = P1^2*P2^2*P4 is itself a degree. The
          // Borel-induced degree [S:B] = (q1+1)(q1^2+q1+1) carries P6(q) instead.
          const std::string first = e.witness.front();
          divides_none(e, set, "(q1+1)(q1^2+q1+1)", checked_mul(q1 + 1, phi(3)));
          e.witness.insert(e.witness.begin(), first + " divides a degree");
        }
        return;
      }
      if (c.n == 4 && plus && c.b == q.f()) {
        return survive(e, "target group: |S|_p = q^6 with q1 = q", {kv("q1", q1)});
      }
      if (c.n == 4 && !plus) return not_a_degree(e, set, "q1^3*P6(q1)", checked_mul(checked_pow(q1, 3), phi(6)));
      break;
    }
    case LieFamily::PSp: {
      if (c.n == 2) {
        const u128 base = checked_mul(q1, checked_pow(q1 - 1, 2));
        if (base % 2 != 0) break;
        const u128 low = base / 2;
        const u128 high = checked_mul(low, q1);
        const bool low_in = set.in_possible(low);
        const bool high_in = set.in_possible(high);
        std::vector<std::string> w = {kv("q1(q1-1)^2/2", low), kv("in_degrees", low_in ? "yes" : "no"),
                                      kv("q1^2(q1-1)^2/2", high), kv("in_degrees", high_in ? "yes" : "no")};
        if (!low_in || !high_in) {
          const std::string used = !low_in ? "q1(q1-1)^2/2" : "q1^2(q1-1)^2/2";
          return eliminate(e, "unipotent degree " + used + " is not a degree", w);
        }
        return survive(e, "no elimination: both PSp4 unipotent values are degrees", w);
      }
      if (c.n == 3) {
        const u128 v = checked_mul(checked_mul(q1, checked_pow(q1 - 1, 2)), phi(3));
        return not_a_degree(e, set, "q1(q1-1)^2(q1^2+q1+1)", v);
      }
      if (c.n == 4) {
        const u128 v = checked_mul(checked_mul(q1, phi(6)), phi(8));
        return not_a_degree(e, set, "q1(q1^2-q1+1)(q1^4+1)", v);
      }
      break;
    }
    case LieFamily::POmegaMinus:
      if (c.n == 4) return not_a_degree(e, set, "q1(q1^4+1)", checked_mul(q1, phi(8)));
      break;
    case LieFamily::G2: {
      const u128 v = checked_mul(checked_mul(q1, phi(3)), phi(6));
      if (v % 3 != 0) throw NonIntegral("q1*P3*P6/3 is not integral at q1 = " + str(q1));
      return not_a_degree(e, set, "q1*P3(q1)*P6(q1)/3", v / 3);
    }
    case LieFamily::Suzuki2B2: {
      const unsigned m = (c.b - 1) / 2;
      const u128 v = checked_mul(checked_pow(2, m), q1 - 1);
      not_a_degree(e, set, "2^m(q1-1)", v);
      e.witness.push_back(kv("m", m));
      return;
    }
    case LieFamily::Ree2G2:
      return eliminate(e, "q1 = 3^b = q^2 needs b even, but b is odd", {kv("b", c.b)});
    case LieFamily::F4:
      if (c.b == 1 && p == 2) {
        const u128 v = checked_mul(checked_mul(checked_pow(q1, 2), checked_pow(phi(3), 2)),
                                   checked_mul(checked_pow(phi(6), 2), phi(12)));
        return divides_none(e, set, "q1^2*P3(q1)^2*P6(q1)^2*P12(q1)", v);
      }
      break;
    default:
      break;
  }
  survive(e, "no elimination rule applies", {kv("q1", q1)});
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string field; in >> field;) out.push_back(field);
  return out;
}

}  // namespace

std::string lie_family_name(LieFamily family) {
  switch (family) {
    case LieFamily::PSL: return "PSL";
    case LieFamily::PSU: return "PSU";
    case LieFamily::PSp: return "PSp";
    case LieFamily::POmegaPlus: return "POmega+";
    case LieFamily::POmegaMinus: return "POmega-";
    case LieFamily::G2: return "G2";
    case LieFamily::Ree2G2: return "2G2";
    case LieFamily::Suzuki2B2: return "2B2";
    case LieFamily::Triality3D4: return "3D4";
    case LieFamily::Ree2F4: return "2F4";
    case LieFamily::E6Twisted: return "2E6";
    case LieFamily::F4: return "F4";
    case LieFamily::E6: return "E6";
    case LieFamily::E7: return "E7";
    case LieFamily::E8: return "E8";
  }
  return "";
}

bool is_classical(LieFamily family) {
  switch (family) {
    case LieFamily::PSL:
    case LieFamily::PSU:
    case LieFamily::PSp:
    case LieFamily::POmegaPlus:
    case LieFamily::POmegaMinus:
      return true;
    default:
      return false;
  }
}

std::string LieCandidate::name(std::uint64_t p) const {
  const std::string field = "(" + field_text(p, b) + ")";
  switch (family) {
    case LieFamily::PSL:
    case LieFamily::PSU:
      return lie_family_name(family) + std::to_string(n) + field;
    case LieFamily::PSp:
      return "PSp" + std::to_string(2 * n) + field;
    case LieFamily::POmegaPlus:
      return "POmega" + std::to_string(2 * n) + "+" + field;
    case LieFamily::POmegaMinus:
      return "POmega" + std::to_string(2 * n) + "-" + field;
    default:
      return lie_family_name(family) + field;
  }
}

std::optional<unsigned> steinberg_exponent(LieFamily family, unsigned n, unsigned b, std::uint64_t p) {
  if (b == 0) return std::nullopt;
  const bool classical = is_classical(family);
  if (!classical && n != 0) return std::nullopt;
  const bool odd_b3 = b % 2 == 1 && b >= 3;
  switch (family) {
    case LieFamily::PSL:
      if (n < 2 || (n == 2 && b == 1 && p <= 3)) return std::nullopt;
      return b * n * (n - 1) / 2;
    case LieFamily::PSU:
      if (n < 3 || (n == 3 && b == 1 && p == 2)) return std::nullopt;
      return b * n * (n - 1) / 2;
    case LieFamily::PSp:
      if (n < 2 || (n == 2 && b == 1 && p == 2)) return std::nullopt;
      return b * n * n;
    case LieFamily::POmegaPlus:
    case LieFamily::POmegaMinus:
      if (n < 4) return std::nullopt;
      return b * n * (n - 1);
    case LieFamily::G2:
      if (b == 1 && p == 2) return std::nullopt;
      return 6 * b;
    case LieFamily::Ree2G2:
      if (p != 3 || !odd_b3) return std::nullopt;
      return 3 * b;
    case LieFamily::Suzuki2B2:
      if (p != 2 || !odd_b3) return std::nullopt;
      return 2 * b;
    case LieFamily::Triality3D4: return 12 * b;
    case LieFamily::Ree2F4:
      if (p != 2 || !odd_b3) return std::nullopt;
      return 12 * b;
    case LieFamily::E6Twisted:
    case LieFamily::E6:
      return 36 * b;
    case LieFamily::F4: return 24 * b;
    case LieFamily::E7: return 63 * b;
    case LieFamily::E8: return 120 * b;
  }
  return std::nullopt;
}

std::optional<unsigned> unipotent_exponent(LieFamily family, unsigned n, unsigned b, std::uint64_t p) {
  switch (family) {
    case LieFamily::PSL:
    case LieFamily::PSU:
      return b * (n - 1) * (n - 2) / 2;
    case LieFamily::PSp:
      return p == 2 ? b * (n - 1) * (n - 1) - 1 : b * (n - 1) * (n - 1);
    case LieFamily::POmegaPlus: return b * (n * n - 3 * n + 3);
    case LieFamily::POmegaMinus: return b * (n * n - 3 * n + 2);
    case LieFamily::Triality3D4: return 7 * b;
    case LieFamily::Ree2F4: return 6 * b + (b - 1) / 2;
    case LieFamily::E6Twisted:
    case LieFamily::E6:
      return 25 * b;
    case LieFamily::F4: return p == 2 ? 13 * b - 1 : 13 * b;
    case LieFamily::E7: return 46 * b;
    case LieFamily::E8: return 91 * b;
    default:
      return std::nullopt;
  }
}

std::vector<DegreeExpr> unipotent_p_part_exprs() {
  std::vector<DegreeExpr> out;
  auto q_power = [](unsigned a, unsigned den = 1) {
    DegreeExpr x;
    x.q_power = a;
    x.den = den;
    return x;
  };
  for (unsigned n = 2; n <= 6; ++n) out.push_back(q_power((n - 1) * (n - 2) / 2));
  for (unsigned n = 2; n <= 6; ++n) out.push_back(q_power((n - 1) * (n - 1)));
  for (unsigned n = 2; n <= 6; ++n) out.push_back(q_power((n - 1) * (n - 1), 2));
  for (unsigned n = 4; n <= 6; ++n) {
    out.push_back(q_power(n * n - 3 * n + 3));
    out.push_back(q_power(n * n - 3 * n + 2));
  }
  for (unsigned a : {7U, 25U, 13U, 46U, 91U}) out.push_back(q_power(a));
  out.push_back(q_power(13, 2));
  return out;
}

std::vector<LieCandidate> enumerate_steinberg_matches(const PrimePowerQ& q, unsigned k) {
  if (k == 0) throw DomainError("enumerate_steinberg_matches: k must be positive");
  const unsigned target = 6 * q.f();
  std::vector<LieCandidate> out;
  if (target % k != 0) return out;
  const unsigned exponent = target / k;
  for (int i = 0; i <= static_cast<int>(LieFamily::E8); ++i) {
    const auto family = static_cast<LieFamily>(i);
    const unsigned n_lo = is_classical(family) ? 2 : 0;
    const unsigned n_hi = is_classical(family) ? target + 3 : 0;
    for (unsigned n = n_lo; n <= n_hi; ++n) {
      for (unsigned b = 1; b <= target; ++b) {
        if (steinberg_exponent(family, n, b, q.p()) == exponent) out.push_back({family, n, b, k});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string sporadic_kind_name(SporadicKind kind) {
  switch (kind) {
    case SporadicKind::many_degrees: return "many_degrees";
    case SporadicKind::min_extendable_degree: return "min_extendable_degree";
    case SporadicKind::generic_small: return "generic_small";
  }
  return "";
}

const std::vector<SporadicFact>& default_sporadic_facts() {
  static const std::vector<SporadicFact> facts = [] {
    std::vector<SporadicFact> out;
    for (const char* name : {"Ly", "Th", "Fi24'", "B", "M"}) {
      out.push_back({name, SporadicKind::many_degrees, 33, {}});
    }
    out.push_back({"O'N", SporadicKind::min_extendable_degree, 10944, {19, 31}});
    for (const char* name : {"M11", "M12", "M22", "M23", "M24", "J1", "J2", "J3", "J4", "HS", "McL", "Suz",
                             "Co1", "Co2", "Co3", "He", "Ru", "HN", "Fi22", "Fi23", "Tits"}) {
      out.push_back({name, SporadicKind::generic_small, 2379, {}});
    }
    return out;
  }();
  return facts;
}

std::vector<SporadicFact> parse_sporadic_facts(std::string_view text) {
  std::vector<SporadicFact> out;
  std::istringstream in{std::string(text)};
  std::size_t line_number = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_number;
    const std::string where = "sporadic data line " + std::to_string(line_number) + ": ";
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto fields = split_ws(line);
    if (fields.empty()) continue;
    if (fields.size() != 4) throw DomainError(where + "expected 4 fields, got " + std::to_string(fields.size()));
    SporadicFact fact;
    fact.name = fields[0];
    if (fields[1] == "many_degrees") {
      fact.kind = SporadicKind::many_degrees;
    } else if (fields[1] == "min_extendable_degree") {
      fact.kind = SporadicKind::min_extendable_degree;
    } else if (fields[1] == "generic_small") {
      fact.kind = SporadicKind::generic_small;
    } else {
      throw DomainError(where + "unknown kind '" + fields[1] + "'");
    }
    try {
      fact.value = parse_u128(fields[2]);
      if (fields[3] != "-") {
        std::istringstream primes(fields[3]);
        for (std::string item; std::getline(primes, item, ',');) {
          const u128 prime = parse_u128(item);
          if (!is_prime(prime)) throw DomainError(item + " is not prime");
          fact.primes.push_back(prime);
        }
      }
    } catch (const DomainError& error) {
      throw DomainError(where + error.what());
    }
    if (fact.value == 0) throw DomainError(where + "value must be positive");
    out.push_back(std::move(fact));
  }
  return out;
}

std::vector<SporadicFact> load_sporadic_facts(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read sporadic data file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_sporadic_facts(text.str());
}

std::vector<const TraceEntry*> EliminationTrace::survivors() const {
  std::vector<const TraceEntry*> out;
  for (const auto& e : entries) {
    if (e.survived) out.push_back(&e);
  }
  return out;
}

bool EliminationTrace::passes() const {
  const auto found = survivors();
  if (found.size() != 1) return false;
  const TraceEntry& s = *found.front();
  const auto f = PrimePowerQ::from(q).f();
  if (!s.lie || *s.lie != LieCandidate{LieFamily::PSL, 4, f, 1}) return false;
  return std::all_of(entries.begin(), entries.end(),
                     [](const TraceEntry& e) { return e.survived || (!e.rule.empty() && !e.witness.empty()); });
}

TraceEntry eliminate_lie(const DegreeSet& set, const LieCandidate& c) {
  const PrimePowerQ& q = set.q;
  TraceEntry e = make_entry(c, q.p());
  const auto bound = unipotent_exponent(c.family, c.n, c.b, q.p());
  if (bound && *bound > 3 * q.f()) {
    eliminate(e, "non-Steinberg unipotent p-part exceeds q^3",
              {kv("unipotent_p_exponent", *bound), kv("q^3_exponent", 3 * q.f())});
    return e;
  }
  final_check(e, set, c);
  return e;
}

std::vector<TraceEntry> eliminate_k_ge_2(const DegreeSet& set) {
  const PrimePowerQ& q = set.q;
  const unsigned six_f = 6 * q.f();
  std::vector<TraceEntry> out;
  const u128 sp = checked_pow(q.p(), 3 * q.f());
  const u128 induced = checked_mul(2, sp);
  const u128 q6 = checked_pow(q.q(), 6);
  u128 l1l2 = 1;
  for (u128 l : zsigmondy(q.q(), 3).primitives) l1l2 = checked_mul(l1l2, l);
  for (u128 l : zsigmondy(q.q(), 4).primitives) l1l2 = checked_mul(l1l2, l);
  for (const auto& c : enumerate_steinberg_matches(q, 2)) {
    TraceEntry e = make_entry(c, q.p());
    std::vector<std::string> w = {kv("2|S|_p", induced), kv("q^6", q6), kv("gcd_with_l1l2", gcd(induced, l1l2)),
                                  kv("in_degrees", set.in_possible(induced) ? "yes" : "no")};
    if (gcd(induced, l1l2) == 1 && induced != q6) {
      eliminate(e, "induced degree 2|S|_p is coprime to l1*l2 but is not q^6", w);
    } else {
      survive(e, "no elimination for k = 2", w);
    }
    out.push_back(std::move(e));
  }
  for (unsigned k : divisors_from(six_f, 3)) {
    TraceEntry e;
    e.candidate = "Lie type";
    e.category = "lie-copies";
    e.k = k;
    const unsigned sp_exponent = six_f / k;
    const unsigned needed = sp_exponent * (k - 1);
    std::vector<std::string> w = {kv("|S|_p_exponent", sp_exponent), kv("tau(1)St(1)^(k-1)_p_exponent", needed),
                                  kv("q^3_exponent", 3 * q.f())};
    if (needed > 3 * q.f()) {
      eliminate(e, "|S|_p^(k-1) must divide q^3", w);
    } else {
      survive(e, "no elimination for k >= 3", w);
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<TraceEntry> eliminate_alternating(const DegreeSet& set) {
  const PrimePowerQ& q = set.q;
  std::vector<TraceEntry> out;

  TraceEntry first;
  first.candidate = "A_n";
  first.category = "alternating";
  first.k = 1;
  const u128 t = checked_mul(q.q(), phi_value(3, q.q()));
  const QuadraticRoot root = solve_triangular(t, 9);
  std::vector<std::string> w = {kv("q*P3", t), kv("9+8*q*P3", root.discriminant), kv("isqrt", root.floor_root)};
  if (!root.n) {
    eliminate(first, "n(n-3)/2 = q*P3 has no integral solution n >= 7", w);
  } else {
    const u128 n_minus_1 = *root.n - 1;
    w.push_back(kv("n", *root.n));
    w.push_back(kv("n-1", n_minus_1));
    if (n_minus_1 < smallest_nontrivial(set) && !set.in_possible(n_minus_1)) {
      eliminate(first, "degree n-1 is below the smallest nontrivial degree q*P3", w);
    } else {
      survive(first, "no elimination for A_n", w);
    }
  }
  out.push_back(std::move(first));

  for (unsigned k : divisors_from(6 * q.f(), 2)) {
    TraceEntry e;
    e.candidate = "A_n";
    e.category = "alternating";
    e.k = k;
    const u128 tk = checked_pow(q.p(), 6 * q.f() / k);
    const QuadraticRoot chi1 = solve_triangular(tk, 9);  // n(n-3)/2 = t
    const QuadraticRoot chi2 = solve_triangular(tk, 1);  // (n-1)(n-2)/2 = t
    std::vector<std::string> wk = {kv("q^(6/k)", tk), kv("9+8t", chi1.discriminant), kv("1+8t", chi2.discriminant)};
    std::optional<u128> n = chi1.n ? chi1.n : chi2.n;
    if (!n) {
      eliminate(e, "q^(6/k) is neither n(n-3)/2 nor (n-1)(n-2)/2 for n >= 7", wk);
    } else {
      const auto chi3_power = try_pow(*n - 1, k);
      wk.push_back(kv("n", *n));
      wk.push_back(kv("(n-1)^k", chi3_power ? str(*chi3_power) : "overflow"));
      if (!in_possible(set, chi3_power)) {
        eliminate(e, "(n-1)^k is not a degree", wk);
      } else {
        survive(e, "no elimination for A_n", wk);
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<TraceEntry> eliminate_sporadic(const DegreeSet& set, const std::vector<SporadicFact>& facts) {
  std::vector<TraceEntry> out;
  const u128 smallest = smallest_nontrivial(set);
  const std::size_t count = set.nontrivial_possible_count();
  for (const auto& fact : facts) {
    TraceEntry e;
    e.candidate = fact.name;
    e.category = "sporadic";
    e.k = 1;
    switch (fact.kind) {
      case SporadicKind::many_degrees: {
        std::vector<std::string> w = {kv("extendable_degrees", fact.value), kv("nontrivial_degrees", count)};
        if (fact.value > count) {
          eliminate(e, "more distinct extendable degrees than nontrivial degrees", w);
        } else {
          survive(e, "no elimination: too few extendable degrees", w);
        }
        break;
      }
      case SporadicKind::min_extendable_degree: {
        std::vector<std::string> w = {kv("extendable_degree", fact.value), kv("q*P3", smallest)};
        const auto spectrum = prime_spectrum(Family::PSL4, set.q);
        std::vector<u128> missing;
        for (u128 prime : fact.primes) {
          if (!std::binary_search(spectrum.begin(), spectrum.end(), prime)) missing.push_back(prime);
        }
        if (fact.value < smallest) {
          eliminate(e, "extendable degree below the smallest nontrivial degree", w);
        } else if (!missing.empty()) {
          std::string text;
          for (u128 prime : missing) text += (text.empty() ? "" : ",") + str(prime);
          w.push_back(kv("primes_missing_from_|PSL4(q)|", text));
          eliminate(e, "prime divisors of |S| do not divide |PSL4(q)|", w);
        } else if (!set.in_possible(fact.value)) {
          eliminate(e, "extendable degree is not a degree", w);
        } else {
          survive(e, "no elimination for this sporadic group", w);
        }
        break;
      }
      case SporadicKind::generic_small: {
        std::vector<std::string> w = {kv("extendable_degree_below", fact.value), kv("q*P3", smallest)};
        if (fact.value <= smallest) {
          eliminate(e, "extendable degree below the smallest nontrivial degree", w);
        } else {
          survive(e, "no elimination: bound exceeds the smallest nontrivial degree", w);
        }
        break;
      }
    }
    out.push_back(std::move(e));
  }

  TraceEntry copies;
  copies.candidate = "sporadic or Tits";
  copies.category = "sporadic";
  copies.k = 2;
  std::size_t powers = 0;
  for (const auto& entry : set.possible) {
    if (entry.value != 1 && is_perfect_power(entry.value)) ++powers;
  }
  std::vector<std::string> w = {kv("needed_power_degrees", kSporadicExtendableDegrees),
                                kv("power_degrees", powers)};
  if (powers < kSporadicExtendableDegrees) {
    eliminate(copies, "k >= 2 needs six nontrivial perfect-power degrees", w);
  } else {
    survive(copies, "no elimination for k >= 2", w);
  }
  out.push_back(std::move(copies));
  return out;
}

EliminationTrace run_elimination(const DegreeSet& set, const std::vector<SporadicFact>& facts) {
  EliminationTrace trace;
  trace.q = set.q.q();
  for (const auto& c : enumerate_steinberg_matches(set.q, 1)) trace.entries.push_back(eliminate_lie(set, c));
  for (auto& e : eliminate_k_ge_2(set)) trace.entries.push_back(std::move(e));
  for (auto& e : eliminate_alternating(set)) trace.entries.push_back(std::move(e));
  for (auto& e : eliminate_sporadic(set, facts)) trace.entries.push_back(std::move(e));
  return trace;
}

EliminationTrace run_elimination(const DegreeSet& set) { return run_elimination(set, default_sporadic_facts()); }

CheckReport trace_report(const EliminationTrace& trace) {
  CheckReport r;
  r.id = "elimination";
  r.q = trace.q;
  std::vector<std::string> survivor_names;
  for (const auto& e : trace.entries) {
    std::vector<std::string> values = {e.survived ? "survived" : "eliminated", e.rule};
    values.insert(values.end(), e.witness.begin(), e.witness.end());
    r.witness(e.candidate + " k=" + std::to_string(e.k), std::move(values));
    if (e.survived) survivor_names.push_back(e.candidate + " k=" + std::to_string(e.k));
  }
  if (!trace.passes()) r.fail("unexpected survivors", survivor_names);
  std::string names;
  for (const auto& s : survivor_names) names += (names.empty() ? "" : ", ") + s;
  r.details = "survivor: " + (names.empty() ? std::string("none") : names) + "; " +
              std::to_string(trace.entries.size() - survivor_names.size()) + " eliminated";
  return r;
}

}  // namespace psl4cd
