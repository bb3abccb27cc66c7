#pragma once

#include "twopaths/graph.hpp"

namespace twopaths {

// Resource knobs for the minimum-length-k search. Components up to
// exact_vertex_cap vertices get an exact subset DP; beyond that a pruned DFS
// runs until dfs_node_budget expansions, then gives up with an error rather
// than ever returning a wrong answer.
struct LongPathLimits {
  int exact_vertex_cap = 22;
  std::uint64_t dfs_node_budget = 2'000'000;
};

struct GraphTooLargeForExactLongPath : std::runtime_error {
  GraphTooLargeForExactLongPath(int cap, std::uint64_t budget);
  int cap;
  std::uint64_t budget;
};

// Path of length <= k, via BFS. Deterministic; returns the shortest.
std::optional<Path> find_path_at_most(const Graph& g, int s, int t, int k,
                                      EdgeFilter filter = {});

// Path of length exactly k. One-sided: a returned path is always correct; a
// miss on a yes-input has probability <= delta. Small search spaces (at most
// 20 vertices once the graph is narrowed to vertices v with
// d(s,v) + d(v,t) <= k) are decided exactly instead, with no randomness.
// Larger ones run color-coding trials seeded from (seed, trial index).
// k is limited to 20; beyond that the trial budget is astronomical anyway.
std::optional<Path> find_path_exact(const Graph& g, int s, int t, int k,
                                    double delta, std::uint64_t seed,
                                    EdgeFilter filter = {});

// Path of length >= k. Exact: answers are definitive, and when the instance
// is too big for the configured limits it throws instead of guessing.
std::optional<Path> find_path_at_least(const Graph& g, int s, int t, int k,
                                       const LongPathLimits& limits = {},
                                       EdgeFilter filter = {});

// Any path at all (the unconstrained slot); the shortest, for determinism.
std::optional<Path> any_path(const Graph& g, int s, int t, EdgeFilter filter = {});

}  // namespace twopaths
