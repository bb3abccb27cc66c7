#pragma once

#include "twopaths/constraints.hpp"

namespace twopaths {

// Brute-force reference answers, independent of the randomized solvers.
// Everything here enumerates simple paths in deterministic DFS order
// (neighbors ascending), so results are stable across runs and platforms.

struct OracleLimits {
  int max_vertices = 14;
  // DFS edge expansions across one oracle call; exceeding it raises an error
  // rather than returning a possibly-truncated answer.
  std::uint64_t max_steps = 2'000'000;
};

struct InstanceTooLargeForOracle : std::runtime_error {
  InstanceTooLargeForOracle(int max_vertices, std::uint64_t max_steps);
  int max_vertices;
  std::uint64_t max_steps;
};

struct EnumCaps {
  std::uint64_t max_paths = 1'000'000;
  int max_len = -1;  // -1: no length cap
  std::uint64_t max_steps = 50'000'000;
};

struct PathEnumeration {
  std::vector<Path> paths;
  bool truncated = false;  // a cap cut the listing short
};

// All simple (s,t)-paths within the caps, in DFS order.
PathEnumeration enumerate_paths(const Graph& g, int s, int t, const EnumCaps& caps = {});

// Definitive solve by exhaustive search over (P1, P2) candidates. Handles
// every constraint shape, including the ones the randomized solver declines.
// Throws InstanceTooLargeForOracle beyond the limits.
std::optional<Solution> oracle_solve(const ProblemInstance& inst,
                                     const OracleLimits& limits = {});

// Minimum-length path from s2 to t2 that satisfies c2 and shares no edge
// with p1; ties broken by DFS discovery order. Same guard as oracle_solve.
std::optional<Path> minimal_valid_partner(const Graph& g, const Path& p1,
                                          int s2, int t2, LengthConstraint c2,
                                          const OracleLimits& limits = {});

}  // namespace twopaths
