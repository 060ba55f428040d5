#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "psl4cd/degrees.hpp"
#include "psl4cd/report.hpp"

namespace psl4cd {

enum class Ambient { PSL4, PSL2, PSL3, PSp4 };

std::string ambient_name(Ambient ambient);

/// Parameters of a subfield row, q = q0^b with b prime. b = 0 when unused.
struct FieldBinding {
  std::uint64_t q0 = 0;
  unsigned b = 0;
};

struct MaxSubgroupRow {
  Ambient ambient;
  std::string id;
  std::string structure;
  std::string condition;
  std::string index_source;
  /// Bindings for which the row applies at q; empty when it does not apply.
  std::function<std::vector<FieldBinding>(const PrimePowerQ&)> bindings;
  /// Index in the ambient group. Throws NonIntegral on a data-entry error.
  std::function<Factorization(const PrimePowerQ&, const FieldBinding&)> index;
};

struct AppliedRow {
  const MaxSubgroupRow* row = nullptr;
  FieldBinding binding;

  /// Row id, suffixed with the binding for subfield rows, e.g. "PSL4(q0)[q0=13,b=2]".
  std::string label() const;
};

const std::vector<MaxSubgroupRow>& subgroup_rows(Ambient ambient);

/// Rows whose condition holds at q, one entry per binding, in table order.
std::vector<AppliedRow> maximal_subgroups(Ambient ambient, const PrimePowerQ& q);

Factorization index_value(const AppliedRow& row, const PrimePowerQ& q);

/// Maximal elements of `values` under divisibility, ascending.
std::vector<u128> divisibility_maxima(std::vector<u128> values);

struct SurvivingRow {
  std::string id;
  u128 index = 0;
  /// Maxima of { v / index : index | v possible }; every admissible multiplier divides one.
  std::vector<u128> menu;
  std::string expected_name;
  std::vector<u128> expected;  // maxima of the expected menu
  bool matches = false;
};

struct EliminatedRow {
  std::string id;
  std::string index;  // decimal
  std::string reason;
};

struct FilterOutcome {
  std::uint64_t q = 0;
  std::vector<SurvivingRow> surviving;
  std::vector<EliminatedRow> eliminated;
};

/// Menus a surviving row may have: P_a with {qP2, P1^2P2, P1P3, qP3, q^3, P2P3},
/// Sp4 with {(2, q - 1)P1}, P_b with {qP1, P1^2, qP2, P2^2, P1P2, q^2}.
std::vector<u128> expected_menu(const std::string& row_id, const PrimePowerQ& q);

/// Keeps a PSL4(q) row iff its index divides some possible degree.
FilterOutcome filter_psl4_subgroups(const DegreeSet& set);

/// Id "7.1": the survivors are exactly P_a, Sp4 and P_b, with the expected menus.
CheckReport check_psl4_subgroup_filter(const DegreeSet& set);

/// Id "7.2": in PSL2(q) only the Borel subgroup has index dividing P1, P2 or q,
/// and P2 is the smallest index.
CheckReport check_psl2_subgroup_indices(const PrimePowerQ& q);

/// Id "7.3": in PSL3(q) only the parabolic [q^2]:GL2(q) has index dividing a
/// member of {qP2, P1^2P2, P1P3, qP3, q^3, P2P3}, and that index is P3.
CheckReport check_psl3_subgroup_indices(const PrimePowerQ& q);

/// Id "7.4": every maximal subgroup of PSp4(q) has index greater than 2P1.
CheckReport check_psp4_subgroup_indices(const PrimePowerQ& q);

/// One tab-separated line per row: ambient, id, structure, condition, index source.
std::vector<std::string> dump_subgroup_rows();

}  // namespace psl4cd
