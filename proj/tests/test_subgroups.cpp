#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "psl4cd/subgroups.hpp"
#include "support.hpp"

using namespace psl4cd;
using psl4cd::testing::str;
using psl4cd::testing::sweep_qs;

namespace {

std::map<std::string, u128> index_map(Ambient ambient, const PrimePowerQ& q) {
  std::map<std::string, u128> out;
  for (const auto& applied : maximal_subgroups(ambient, q)) {
    auto v = index_value(applied, q).value();
    REQUIRE(v.has_value());
    out[applied.label()] = *v;
  }
  return out;
}

u128 at(const char* text, std::uint64_t q) { return evaluate(expr(text), q); }

Family family_of(Ambient ambient) {
  switch (ambient) {
    case Ambient::PSL4: return Family::PSL4;
    case Ambient::PSL2: return Family::PSL2;
    case Ambient::PSL3: return Family::PSL3;
    case Ambient::PSp4: return Family::PSp4;
  }
  return Family::PSL4;
}

}  // namespace

TEST_CASE("PSL4 indices at q = 13") {
  const auto q = PrimePowerQ::from(13);
  const auto m = index_map(Ambient::PSL4, q);
  CHECK(str(m.at("P_a")) == "2380");
  CHECK(str(m.at("P_b")) == "31110");
  CHECK(str(m.at("Sp4")) == "185562");
  CHECK(m.count("2^4.A6") == 1);
  CHECK(m.count("2^4.S6") == 0);
  CHECK(m.count("A7") == 0);
  CHECK(m.count("PSU4(2)") == 1);
  for (const auto& [label, _] : m) CHECK(label.find("q0=") == std::string::npos);
}

TEST_CASE("subfield rows bind every prime divisor of f") {
  const auto q = PrimePowerQ::from(4096);  // 2^12
  std::set<std::string> labels;
  for (const auto& applied : maximal_subgroups(Ambient::PSL4, q)) labels.insert(applied.label());
  CHECK(labels.count("PSL4(q0)[q0=64,b=2]") == 1);
  CHECK(labels.count("PSL4(q0)[q0=16,b=3]") == 1);
  CHECK(labels.count("PSU4(q0)[q0=64,b=2]") == 1);
  CHECK(std::none_of(labels.begin(), labels.end(), [](const std::string& l) { return l.find("b=4") != std::string::npos; }));
}

TEST_CASE("PSL4 subfield extension follows the determinant condition") {
  auto index_for = [](std::uint64_t qv) {
    const auto q = PrimePowerQ::from(qv);
    for (const auto& applied : maximal_subgroups(Ambient::PSL4, q)) {
      if (applied.row->id == "PSL4(q0)") return index_value(applied, q);
    }
    FAIL("no subfield row");
    return Factorization{};
  };
  // c = 2 for q = 25, q0 = 5, although (q0 - 1, 4) = 4.
  CHECK(index_for(25) == group_order(Family::PSL4, PrimePowerQ::from(25))
                             .quotient(group_order(Family::PSL4, PrimePowerQ::from(5)) * factorize(2)));
  // c = 1 for q = 27, q0 = 3.
  CHECK(index_for(27) == group_order(Family::PSL4, PrimePowerQ::from(27))
                             .quotient(group_order(Family::PSL4, PrimePowerQ::from(3))));
  // c = 2 for q = 81, q0 = 9, although (q0 - 1, 4) = 4.
  CHECK(index_for(81) == group_order(Family::PSL4, PrimePowerQ::from(81))
                             .quotient(group_order(Family::PSL4, PrimePowerQ::from(9)) * factorize(2)));
  // c = 2 for q = 169, q0 = 13, although (q0 - 1, 4) = 4.
  CHECK(index_for(169) == group_order(Family::PSL4, PrimePowerQ::from(169))
                              .quotient(group_order(Family::PSL4, PrimePowerQ::from(13)) * factorize(2)));
}

TEST_CASE("every index divides the ambient order") {
  for (std::uint64_t qv : sweep_qs()) {
    const auto q = PrimePowerQ::from(qv);
    for (Ambient a : {Ambient::PSL4, Ambient::PSL2, Ambient::PSL3, Ambient::PSp4}) {
      const Factorization order = group_order(family_of(a), q);
      for (const auto& applied : maximal_subgroups(a, q)) {
        const Factorization index = index_value(applied, q);
        INFO(ambient_name(a), " ", applied.label(), " q=", qv);
        CHECK(index.divides(order));
        CHECK_FALSE(index.is_one());
      }
    }
  }
}

TEST_CASE("order quotients equal their closed forms") {
  for (std::uint64_t qv : sweep_qs()) {
    const auto q = PrimePowerQ::from(qv);
    INFO("q=", qv);
    const auto psp4 = index_map(Ambient::PSp4, q);
    CHECK(psp4.at("P1") == at("P2*P4", qv));
    CHECK(psp4.at("P2") == at("P2*P4", qv));
    CHECK(psp4.at("Sp2oSp2.2") == at("1/2*q^2*P4", qv));
    CHECK(psp4.at("PSp2(q^2).2") == at("1/2*q^2*P1*P2", qv));
    if (q.odd()) {
      CHECK(psp4.at("GU2.2") == at("1/2*q^3*P1*P4", qv));
      CHECK(psp4.at("GL2.2") == at("1/2*q^3*P2*P4", qv));
    } else {
      CHECK(psp4.at("O4+") == at("1/2*q^2*P4", qv));
      CHECK(psp4.at("O4-") == at("1/2*q^2*P1*P2", qv));
    }
    if (psp4.count("Sz")) CHECK(psp4.at("Sz") == at("q^2*P1*P2^2", qv));
    if (psp4.count("PSL2")) CHECK(psp4.at("PSL2") == at("q^3*P1*P2*P4", qv));

    const auto psl3 = index_map(Ambient::PSL3, q);
    CHECK(psl3.at("P") == at("P3", qv));

    const auto psl2 = index_map(Ambient::PSL2, q);
    CHECK(psl2.at("Borel") == at("P2", qv));
  }
}

TEST_CASE("special rows at prime q are mutually exclusive") {
  for (std::uint64_t qv : sweep_qs()) {
    const auto q = PrimePowerQ::from(qv);
    const auto psl4 = index_map(Ambient::PSL4, q);
    const bool one_mod_4_prime = q.f() == 1 && qv % 4 == 1;
    CHECK(psl4.count("2^4.S6") + psl4.count("2^4.A6") == (one_mod_4_prime ? 1u : 0u));
    const auto psp4 = index_map(Ambient::PSp4, q);
    CHECK(psp4.count("2^4.Omega4-(2)") + psp4.count("2^4.O4-(2)") == (q.f() == 1 ? 1u : 0u));
    CHECK(psp4.count("S6") + psp4.count("A6") <= 1);
  }
}

TEST_CASE("divisibility maxima against brute force") {
  auto& rng = psl4cd::testing::rng();
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<u128> values;
    const int n = static_cast<int>(rng() % 12) + 1;
    for (int i = 0; i < n; ++i) values.push_back(rng() % 200 + 1);
    std::set<u128> expected;
    for (u128 v : values) {
      bool dominated = std::any_of(values.begin(), values.end(), [&](u128 w) { return w != v && w % v == 0; });
      if (!dominated) expected.insert(v);
    }
    const auto got = divisibility_maxima(values);
    CHECK(std::vector<u128>(expected.begin(), expected.end()) == got);
  }
  CHECK(divisibility_maxima({}).empty());
}

TEST_CASE("filter at q = 13 keeps the three expected rows") {
  const DegreeSet set = degree_set(PrimePowerQ::from(13));
  const FilterOutcome outcome = filter_psl4_subgroups(set);
  std::vector<std::string> ids;
  for (const auto& s : outcome.surviving) {
    ids.push_back(s.id);
    CHECK(s.matches);
  }
  std::sort(ids.begin(), ids.end());
  CHECK(ids == std::vector<std::string>{"P_a", "P_b", "Sp4"});
  const auto& sp4 = *std::find_if(outcome.surviving.begin(), outcome.surviving.end(),
                                  [](const SurvivingRow& s) { return s.id == "Sp4"; });
  CHECK(sp4.menu == std::vector<u128>{24});
}

TEST_CASE("subgroup checks pass across the sweep") {
  for (std::uint64_t qv : sweep_qs()) {
    const auto q = PrimePowerQ::from(qv);
    const DegreeSet set = degree_set(q);
    for (const CheckReport& r : {check_psl4_subgroup_filter(set), check_psl2_subgroup_indices(q),
                                 check_psl3_subgroup_indices(q), check_psp4_subgroup_indices(q)}) {
      INFO(r.id, " q=", qv, " ", r.details);
      CHECK(r.status == Status::pass);
    }
  }
}

TEST_CASE("PSp4 smallest index is P2*P4") {
  for (std::uint64_t qv : {13ULL, 16ULL, 49ULL, 128ULL}) {
    const auto r = check_psp4_subgroup_indices(PrimePowerQ::from(qv));
    auto it = std::find_if(r.witnesses.begin(), r.witnesses.end(),
                           [](const Witness& w) { return w.label == "smallest index, 2P1"; });
    REQUIRE(it != r.witnesses.end());
    CHECK(it->values[0] == str(at("P2*P4", qv)));
  }
}

TEST_CASE("row dump lists every table") {
  const auto lines = dump_subgroup_rows();
  CHECK(lines.size() == 14 + 9 + 10 + 15);
}
