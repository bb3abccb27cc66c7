#pragma once

#include "twopaths/partition.hpp"

namespace twopaths {

struct UniversalFamilyLimitsExceeded : std::runtime_error {
  UniversalFamilyLimitsExceeded(int m, int r, const UniversalLimits& limits);
  int m;
  int r;
};

// A set of 0/1 words over ground positions 0..m-1 such that every r-subset
// of positions sees every one of its 2^r patterns in some member.
struct UniversalFamily {
  int ground_size = 0;  // m
  int strength = 0;     // r
  std::vector<std::uint32_t> members;  // bit i = position i

  // Full enumeration: the family is all 2^m words.
  bool exhaustive() const { return strength >= ground_size; }
};

// r >= m: full enumeration (needs m <= limits.max_m). r < m: greedy
// first-fit cover (needs m <= limits.max_m and r <= limits.max_r). Anything
// else throws UniversalFamilyLimitsExceeded. Construction is deterministic.
UniversalFamily build_universal_family(int m, int r, const UniversalLimits& limits = {});

// Exhaustive check of the family property. Throws std::invalid_argument when
// the check space itself is out of reach.
bool verify_universal(const UniversalFamily& family);

// Text form: header "m r", then one member per line as an m-character
// bitstring, position 0 first.
std::string family_to_text(const UniversalFamily& family);
UniversalFamily family_from_text(std::string_view text);

// solve() with the random colorings replaced by a universal family over the
// colorable edges, at strength min(r, m'). Any one solution constrains at
// most r colorable edges, and some member colors those correctly, so a
// NoSolution answer is definitive. Family limits propagate as
// UniversalFamilyLimitsExceeded.
SolveResult derandomized_solve(const ProblemInstance& inst, const SolveConfig& config = {});

}  // namespace twopaths
