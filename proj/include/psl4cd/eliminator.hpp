#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psl4cd/degrees.hpp"
#include "psl4cd/report.hpp"

namespace psl4cd {

enum class LieFamily {
  PSL,          // PSL_n(q1), n >= 2
  PSU,          // PSU_n(q1), n >= 3
  PSp,          // PSp_2n(q1) and POmega_2n+1(q1), n >= 2
  POmegaPlus,   // POmega+_2n(q1), n >= 4
  POmegaMinus,  // POmega-_2n(q1), n >= 4
  G2,
  Ree2G2,       // 2G2(3^b), b odd >= 3
  Suzuki2B2,    // 2B2(2^b), b odd >= 3
  Triality3D4,
  Ree2F4,       // 2F4(2^b), b odd >= 3
  E6Twisted,    // 2E6
  F4,
  E6,
  E7,
  E8,
};

std::string lie_family_name(LieFamily family);

/// Classical families carry a rank n; exceptional ones have n = 0.
bool is_classical(LieFamily family);

/// G(q1) with q1 = p^b, appearing as k copies.
struct LieCandidate {
  LieFamily family;
  unsigned n = 0;
  unsigned b = 1;
  unsigned k = 1;

  /// e.g. "PSL4(13)", "PSL2(13^6)", "PSp4(2^6)", "G2(13)".
  std::string name(std::uint64_t p) const;

  friend bool operator==(const LieCandidate&, const LieCandidate&) = default;
  friend auto operator<=>(const LieCandidate&, const LieCandidate&) = default;
};

/// Exponent e with |G(p^b)|_p = p^e, or nullopt when (family, n, b, p) is not
/// a simple group of that family.
std::optional<unsigned> steinberg_exponent(LieFamily family, unsigned n, unsigned b, std::uint64_t p);

/// p-part exponent of a non-Steinberg unipotent degree of G(p^b), or nullopt
/// for families without such a bound (G2, 2B2, 2G2).
std::optional<unsigned> unipotent_exponent(LieFamily family, unsigned n, unsigned b, std::uint64_t p);

/// The unipotent p-parts as expressions in q, for a concrete rank where one
/// is needed: PSL_n and PSp_2n for n = 2..6 (odd p) and POmega_2n for n = 4..6.
/// The 2F4 entry q^6*sqrt(q/2) has no expression form and is omitted.
std::vector<DegreeExpr> unipotent_p_part_exprs();

/// Every (family, n, b) with steinberg_exponent * k = 6f, ordered by (family, n, b).
std::vector<LieCandidate> enumerate_steinberg_matches(const PrimePowerQ& q, unsigned k);

enum class SporadicKind { many_degrees, min_extendable_degree, generic_small };

std::string sporadic_kind_name(SporadicKind kind);

struct SporadicFact {
  std::string name;
  SporadicKind kind;
  /// many_degrees: count of distinct nontrivial extendable degrees;
  /// min_extendable_degree: that degree; generic_small: an extendable degree lies below it.
  u128 value = 0;
  std::vector<u128> primes;

  friend bool operator==(const SporadicFact&, const SporadicFact&) = default;
};

const std::vector<SporadicFact>& default_sporadic_facts();

/// One record per line: `name kind value primes`, whitespace separated,
/// primes comma separated or '-', '#' starts a comment. Throws DomainError
/// naming the line on malformed input.
std::vector<SporadicFact> parse_sporadic_facts(std::string_view text);

/// Reads and parses a file; throws DomainError when it cannot be read.
std::vector<SporadicFact> load_sporadic_facts(const std::string& path);

struct TraceEntry {
  std::string candidate;
  std::string category;  // "classical", "exceptional", "alternating", "sporadic"
  unsigned k = 1;
  bool survived = false;
  std::string rule;
  std::vector<std::string> witness;
  std::optional<LieCandidate> lie;
};

struct EliminationTrace {
  std::uint64_t q = 0;
  std::vector<TraceEntry> entries;

  std::vector<const TraceEntry*> survivors() const;
  /// Exactly one survivor, PSL4(q) with b = f and k = 1, and every other
  /// entry carries a rule and a witness.
  bool passes() const;
};

/// Verdict for a k = 1 Lie-type candidate.
TraceEntry eliminate_lie(const DegreeSet& set, const LieCandidate& candidate);

/// Every k = 2 candidate, plus one entry per divisor k >= 3 of 6f.
std::vector<TraceEntry> eliminate_k_ge_2(const DegreeSet& set);

/// A_n, n >= 7, for k = 1 and for every divisor k >= 2 of 6f.
std::vector<TraceEntry> eliminate_alternating(const DegreeSet& set);

/// One entry per fact for k = 1, plus one entry for k >= 2.
std::vector<TraceEntry> eliminate_sporadic(const DegreeSet& set, const std::vector<SporadicFact>& facts);

EliminationTrace run_elimination(const DegreeSet& set, const std::vector<SporadicFact>& facts);
EliminationTrace run_elimination(const DegreeSet& set);

/// Id "elimination": one witness per entry, status pass iff trace.passes().
CheckReport trace_report(const EliminationTrace& trace);

}  // namespace psl4cd
