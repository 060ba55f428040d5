#pragma once

#include <vector>

#include "psl4cd/degrees.hpp"
#include "psl4cd/report.hpp"

namespace psl4cd {

/// Expressions one of which must witness every coprime pair of nontrivial degrees.
const std::vector<DegreeExpr>& coprime_pair_exprs();

/// Expressions allowed to take a perfect-power value.
const std::vector<DegreeExpr>& power_degree_exprs();

/// Id "3.1": a nontrivial degree coprime to l1*l2 is q^6, for every primitive
/// prime l1 of Phi3 and l2 of Phi4.
CheckReport check_coprime_degree_is_steinberg(const DegreeSet& set);

/// Id "3.2": no degree is a proper multiple of P1^3*P2*P3 or P1^2*P2^2*P4.
CheckReport check_maximal_degrees(const DegreeSet& set);

/// Id "3.3": every coprime pair of nontrivial degrees involves one of
/// coprime_pair_exprs(); the only consecutive degrees are q*P3 and P2*P4.
CheckReport check_coprime_and_consecutive_pairs(const DegreeSet& set);

/// Id "3.4": no degree divisible by P3 (or P3/3 when 3 | P1) is a perfect
/// power; perfect-power degrees come from power_degree_exprs(), at most five.
CheckReport check_power_degrees(const DegreeSet& set);

/// Id "3.5": for odd q, P1*P2*P3*P4/2 is a degree of SL4(q) and not of PSL4(q).
CheckReport check_sl4_half_degree_absent(const DegreeSet& set);

/// Id "s4": q^6 is the only prime-power degree, (P3, P4) = 1, and the gcd of
/// the two maximal degrees avoids every primitive prime of P3 and P4.
CheckReport check_steinberg_arithmetic(const DegreeSet& set);

/// Id "s6": a primitive prime of p^{4f} - 1 misses |PGL4(p^b)| for 0 < b < f,
/// the two maximal degrees have no proper multiples, and p^{3f} - 1 has a
/// primitive prime.
CheckReport check_automorphism_arithmetic(const DegreeSet& set);

}  // namespace psl4cd
