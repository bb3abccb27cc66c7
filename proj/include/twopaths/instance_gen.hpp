#pragma once

#include "twopaths/constraints.hpp"

namespace twopaths {

enum class TerminalRule : std::uint8_t {
  Distinct,      // four distinct vertices
  Coincident,    // both pairs share endpoints: s1 = s2, t1 = t2
  CrossingCycle  // four distinct w < x < y < z used as (w,y) and (x,z)
};
const char* terminal_rule_name(TerminalRule rule);
std::optional<TerminalRule> terminal_rule_from_name(std::string_view name);

// Uniform simple graph with exactly m of the C(n,2) possible edges, plus
// terminals drawn per rule. Fully determined by the arguments; throws
// std::invalid_argument when m exceeds C(n,2) or n is too small for the
// rule (all rules need 4 candidate vertices, n >= 4).
ProblemInstance gen_random(int n, int m, TerminalRule rule, LengthConstraint c1,
                           LengthConstraint c2, std::uint64_t seed);

// A solvable instance in a chosen shape: two vertex-disjoint paths with
// lengths meeting the constraints are planted, then extra_n decoy vertices
// and extra_m decoy edges are sprinkled in and all labels shuffled. Returns
// the instance with its planted certificate (which decoys never invalidate,
// since the planted paths themselves stay intact).
struct PlantedShape {
  CaseKind kind = CaseKind::ShortShort;  // a supported kind
  int k1 = 1, k2 = 1;
  int extra_n = 0, extra_m = 0;
};
std::pair<ProblemInstance, Solution> gen_planted(const PlantedShape& shape,
                                                 std::uint64_t seed);

// The constraint pair a supported case kind stands for, at the given bounds.
std::pair<LengthConstraint, LengthConstraint> constraints_for_case(CaseKind kind,
                                                                   int k1, int k2);

}  // namespace twopaths
