#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "psl4cd/eliminator.hpp"
#include "support.hpp"

using namespace psl4cd;
using psl4cd::testing::sweep_qs;

namespace {

std::set<std::string> names(const std::vector<LieCandidate>& cs, std::uint64_t p) {
  std::set<std::string> out;
  for (const auto& c : cs) out.insert(c.name(p));
  return out;
}

const TraceEntry& find(const EliminationTrace& trace, const std::string& candidate, unsigned k = 1) {
  auto it = std::find_if(trace.entries.begin(), trace.entries.end(),
                         [&](const TraceEntry& e) { return e.candidate == candidate && e.k == k; });
  REQUIRE(it != trace.entries.end());
  return *it;
}

bool has_witness(const TraceEntry& e, const std::string& value) {
  return std::find(e.witness.begin(), e.witness.end(), value) != e.witness.end();
}

// Exponent of |G(p^b)|_p written out per family, independent of the library table.
struct BruteFamily {
  LieFamily family;
  unsigned n_min;
  bool classical;
  std::function<bool(unsigned n, unsigned b, std::uint64_t p)> allowed;
  std::function<unsigned(unsigned n, unsigned b)> exponent;
};

std::vector<BruteFamily> brute_families() {
  auto any = [](unsigned, unsigned, std::uint64_t) { return true; };
  auto odd_b = [](std::uint64_t prime) {
    return [prime](unsigned, unsigned b, std::uint64_t p) { return p == prime && b % 2 == 1 && b > 1; };
  };
  return {
      {LieFamily::PSL, 2, true, [](unsigned n, unsigned b, std::uint64_t p) { return !(n == 2 && b == 1 && p < 4); },
       [](unsigned n, unsigned b) { return b * n * (n - 1) / 2; }},
      {LieFamily::PSU, 3, true, [](unsigned n, unsigned b, std::uint64_t p) { return !(n == 3 && b == 1 && p == 2); },
       [](unsigned n, unsigned b) { return b * n * (n - 1) / 2; }},
      {LieFamily::PSp, 2, true, [](unsigned n, unsigned b, std::uint64_t p) { return !(n == 2 && b == 1 && p == 2); },
       [](unsigned n, unsigned b) { return b * n * n; }},
      {LieFamily::POmegaPlus, 4, true, any, [](unsigned n, unsigned b) { return b * n * (n - 1); }},
      {LieFamily::POmegaMinus, 4, true, any, [](unsigned n, unsigned b) { return b * n * (n - 1); }},
      {LieFamily::G2, 0, false, [](unsigned, unsigned b, std::uint64_t p) { return !(b == 1 && p == 2); },
       [](unsigned, unsigned b) { return 6 * b; }},
      {LieFamily::Ree2G2, 0, false, odd_b(3), [](unsigned, unsigned b) { return 3 * b; }},
      {LieFamily::Suzuki2B2, 0, false, odd_b(2), [](unsigned, unsigned b) { return 2 * b; }},
      {LieFamily::Triality3D4, 0, false, any, [](unsigned, unsigned b) { return 12 * b; }},
      {LieFamily::Ree2F4, 0, false, odd_b(2), [](unsigned, unsigned b) { return 12 * b; }},
      {LieFamily::E6Twisted, 0, false, any, [](unsigned, unsigned b) { return 36 * b; }},
      {LieFamily::F4, 0, false, any, [](unsigned, unsigned b) { return 24 * b; }},
      {LieFamily::E6, 0, false, any, [](unsigned, unsigned b) { return 36 * b; }},
      {LieFamily::E7, 0, false, any, [](unsigned, unsigned b) { return 63 * b; }},
      {LieFamily::E8, 0, false, any, [](unsigned, unsigned b) { return 120 * b; }},
  };
}

}  // namespace

TEST_CASE("Steinberg matches at q = 13") {
  const auto q = PrimePowerQ::from(13);
  CHECK(names(enumerate_steinberg_matches(q, 1), 13) ==
        std::set<std::string>{"PSL2(13^6)", "PSL3(13^2)", "PSU3(13^2)", "PSL4(13)", "PSU4(13)", "G2(13)"});
  CHECK(names(enumerate_steinberg_matches(q, 2), 13) ==
        std::set<std::string>{"PSL2(13^3)", "PSL3(13)", "PSU3(13)"});
  for (const auto& c : enumerate_steinberg_matches(q, 1)) CHECK(c.family != LieFamily::PSp);
}

TEST_CASE("Steinberg matches agree with brute force") {
  for (std::uint64_t qv : sweep_qs()) {
    const auto q = PrimePowerQ::from(qv);
    const unsigned six_f = 6 * q.f();
    for (unsigned k : {1U, 2U}) {
      std::set<LieCandidate> expected;
      for (const auto& fam : brute_families()) {
        const unsigned n_lo = fam.classical ? fam.n_min : 0;
        const unsigned n_hi = fam.classical ? 30 : 0;
        for (unsigned n = n_lo; n <= n_hi; ++n) {
          for (unsigned b = 1; b <= six_f; ++b) {
            if (fam.allowed(n, b, q.p()) && fam.exponent(n, b) * k == six_f) expected.insert({fam.family, n, b, k});
          }
        }
      }
      const auto got = enumerate_steinberg_matches(q, k);
      INFO("q=", qv, " k=", k);
      CHECK(std::set<LieCandidate>(got.begin(), got.end()) == expected);
      CHECK(std::is_sorted(got.begin(), got.end()));
    }
  }
}

TEST_CASE("no Suzuki candidate at q = 64") {
  for (const auto& c : enumerate_steinberg_matches(PrimePowerQ::from(64), 1)) {
    CHECK(c.family != LieFamily::Suzuki2B2);
  }
}

TEST_CASE("elimination at q = 13") {
  const DegreeSet set = degree_set(PrimePowerQ::from(13));
  const EliminationTrace trace = run_elimination(set);
  CHECK(trace.passes());
  const auto survivors = trace.survivors();
  REQUIRE(survivors.size() == 1);
  CHECK(survivors.front()->candidate == "PSL4(13)");

  CHECK(has_witness(find(trace, "PSL2(13^6)"), "q1+1=4826810"));
  CHECK(has_witness(find(trace, "PSU4(13)"), "q1^3*P6(q1)=344929"));
  CHECK(has_witness(find(trace, "G2(13)"), "q1*P3(q1)*P6(q1)/3=124501"));
  CHECK_FALSE(find(trace, "PSL3(13^2)").survived);
  CHECK(has_witness(find(trace, "PSL3(13^2)"), "(q1-1)^2(q1+1)=4798080 divides a degree"));
  CHECK_FALSE(find(trace, "PSU3(13^2)").survived);
  for (const char* c : {"PSL2(13^3)", "PSL3(13)", "PSU3(13)"}) {
    const auto& e = find(trace, c, 2);
    CHECK_FALSE(e.survived);
    CHECK(has_witness(e, "2|S|_p=4394"));
    CHECK(has_witness(e, "q^6=4826809"));
  }

  const auto& an = find(trace, "A_n", 1);
  CHECK_FALSE(an.survived);
  CHECK(has_witness(an, "9+8*q*P3=19041"));
  CHECK(has_witness(an, "isqrt=137"));
  CHECK(has_witness(find(trace, "A_n", 2), "9+8t=17585"));

  const auto& on = find(trace, "O'N");
  CHECK_FALSE(on.survived);
  CHECK(on.rule == "prime divisors of |S| do not divide |PSL4(q)|");
  CHECK(has_witness(on, "primes_missing_from_|PSL4(q)|=19,31"));
  CHECK(has_witness(find(trace, "M"), "nontrivial_degrees=30"));
  CHECK_FALSE(find(trace, "sporadic or Tits", 2).survived);
}

TEST_CASE("O'N is eliminated by the degree bound at q = 23") {
  const EliminationTrace trace = run_elimination(degree_set(PrimePowerQ::from(23)));
  const auto& on = find(trace, "O'N");
  CHECK(on.rule == "extendable degree below the smallest nontrivial degree");
  CHECK(has_witness(on, "q*P3=12719"));
}

TEST_CASE("k = 2 at q = 16 and F4(2)") {
  const EliminationTrace trace = run_elimination(degree_set(PrimePowerQ::from(16)));
  CHECK(trace.passes());
  for (const auto& e : trace.entries) {
    if (e.lie && e.k == 2) CHECK(has_witness(e, "2|S|_p=8192"));
  }
  const auto& f4 = find(trace, "F4(2)");
  CHECK_FALSE(f4.survived);
  CHECK(has_witness(f4, "q1^2*P3(q1)^2*P6(q1)^2*P12(q1)=22932"));
}

TEST_CASE("q = 169 keeps PSL4(13^2) and enumerates subfield exponents") {
  const EliminationTrace trace = run_elimination(degree_set(PrimePowerQ::from(169)));
  CHECK(trace.passes());
  REQUIRE(trace.survivors().size() == 1);
  CHECK(trace.survivors().front()->candidate == "PSL4(13^2)");
  CHECK_FALSE(find(trace, "G2(13^2)").survived);
  CHECK_FALSE(find(trace, "PSL2(13^12)").survived);
  CHECK_FALSE(find(trace, "PSp4(13^3)").survived);
}

TEST_CASE("elimination sweep has a unique survivor and a witness everywhere") {
  for (std::uint64_t qv : sweep_qs()) {
    const auto q = PrimePowerQ::from(qv);
    const EliminationTrace trace = run_elimination(degree_set(q));
    INFO("q=", qv);
    CHECK(trace.passes());
    for (const auto& e : trace.entries) {
      if (e.survived) continue;
      CHECK_FALSE(e.rule.empty());
      CHECK_FALSE(e.witness.empty());
    }
    CHECK(trace_report(trace).status == Status::pass);
  }
}

TEST_CASE("unipotent bound leaves only small ranks") {
  for (std::uint64_t qv : sweep_qs()) {
    const auto q = PrimePowerQ::from(qv);
    for (const auto& c : enumerate_steinberg_matches(q, 1)) {
      const auto e = unipotent_exponent(c.family, c.n, c.b, q.p());
      if (!e || *e > 3 * q.f()) continue;
      INFO(c.name(q.p()));
      if (c.family == LieFamily::PSL || c.family == LieFamily::PSU || c.family == LieFamily::PSp) CHECK(c.n <= 4);
      if (c.family == LieFamily::POmegaMinus) CHECK(c.n == 4);
      CHECK(c.family != LieFamily::POmegaPlus);
      CHECK(c.family != LieFamily::Triality3D4);
      CHECK(c.family != LieFamily::E6);
      CHECK(c.family != LieFamily::E7);
      CHECK(c.family != LieFamily::E8);
      const auto steinberg = steinberg_exponent(c.family, c.n, c.b, q.p());
      REQUIRE(steinberg.has_value());
      CHECK(2 * *e <= *steinberg);
    }
  }
}

TEST_CASE("an uneliminable fact fails the trace") {
  const DegreeSet set = degree_set(PrimePowerQ::from(13));
  const EliminationTrace trace = run_elimination(set, {{"X", SporadicKind::many_degrees, 10, {}}});
  CHECK_FALSE(trace.passes());
  const CheckReport report = trace_report(trace);
  CHECK(report.status == Status::fail);
}

TEST_CASE("sporadic data parsing") {
  std::string text = "# name kind value primes\n";
  for (const auto& f : default_sporadic_facts()) {
    std::string primes;
    for (u128 p : f.primes) primes += (primes.empty() ? "" : ",") + to_string(p);
    text += f.name + " " + sporadic_kind_name(f.kind) + " " + to_string(f.value) + " " +
            (primes.empty() ? "-" : primes) + "  # comment\n\n";
  }
  CHECK(parse_sporadic_facts(text) == default_sporadic_facts());
  CHECK(default_sporadic_facts().size() == 27);
  CHECK_THROWS_WITH_AS(parse_sporadic_facts("a many_degrees 3\n"), "sporadic data line 1: expected 4 fields, got 3",
                       DomainError);
  CHECK_THROWS_WITH_AS(parse_sporadic_facts("\nx odd 3 -\n"), "sporadic data line 2: unknown kind 'odd'", DomainError);
  CHECK_THROWS_AS(parse_sporadic_facts("x generic_small 3 4\n"), DomainError);
  CHECK_THROWS_AS(parse_sporadic_facts("x generic_small 0 -\n"), DomainError);
  CHECK_THROWS_AS(load_sporadic_facts("/nonexistent/facts.txt"), DomainError);
}

TEST_CASE("unipotent p-part expressions round-trip") {
  for (const auto& x : unipotent_p_part_exprs()) CHECK(parse_expr(format_expr(x)) == x);
}
