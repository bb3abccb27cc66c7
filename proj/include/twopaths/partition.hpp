#pragma once

#include <functional>

#include "twopaths/constraints.hpp"
#include "twopaths/path_engine.hpp"
#include "twopaths/rng.hpp"

namespace twopaths {

// Vertices v with d(s1,v) + d(v,t1) <= k1 (both distances finite), and the
// edges with both endpoints in that set. Only these edges can ever carry a
// first path of length <= k1, and only they are worth coloring when the
// second constraint leaves its path free to roam.
struct NearbySets {
  std::vector<std::uint8_t> nearby_vertex;  // size n, 0/1
  std::vector<int> nearby_edges;            // edge ids, ascending
  int nearby_vertex_count = 0;

  int nearby_edge_count() const { return (int)nearby_edges.size(); }
};
NearbySets compute_nearby(const Graph& g, int s1, int t1, int k1);

// min(ceil(2^r * ln(1/delta)), 2^m_prime), at least 1. With per-trial
// success probability >= 2^-r, that many independent trials fail together
// with probability at most delta; and 2^m_prime trials cover every coloring
// of m_prime edges, after which repetition is pointless.
std::uint64_t trial_count(int r, double delta, int m_prime);

// One random 2-coloring of the given edges. Bit j of word floor(i/64) from
// the stream decides edge i (bit 0 -> color 1, bit 1 -> color 2).
struct ColorAssignment {
  std::vector<int> colorable;        // edge ids
  std::vector<std::uint8_t> colors;  // parallel to colorable; values 1 or 2

  // Writes colors into an edge-id-indexed array; untouched entries keep
  // whatever the caller put there (the solvers pre-fill with 2, so uncolored
  // edges land in the second graph).
  void paint(std::vector<std::uint8_t>& edge_colors) const;
};
ColorAssignment random_edge_partition(std::span<const int> colorable, SplitMix64& rng);

struct UniversalLimits {
  int max_m = 16;
  int max_r = 4;
};

struct SolveConfig {
  double delta = 1e-9;
  std::uint64_t seed = 0;
  enum class Mode { Random, Universal } mode = Mode::Random;
  int threads = 1;
  LongPathLimits long_path{};
  UniversalLimits universal{};
};

enum class SolveStatus { Found, NoSolution, Unsupported };

struct TrialPlan {
  int exponent = 0;        // r for the dispatched case
  int colorable_count = 0; // m'
  std::uint64_t trials = 0;
  double delta = 0.0;      // residual miss probability bound (0 = exact)
};

struct SolveResult {
  SolveStatus status = SolveStatus::NoSolution;
  std::optional<Solution> solution;  // in the instance's own path order
  CaseId case_id{};
  TrialPlan plan{};
  std::int64_t winning_trial = -1;
};

// Trial exponents, in normalized (canonical-order) terms. These follow the
// success-probability proofs, not their rounded-up summary forms.
int case_exponent(CaseKind kind, int k1, int k2);

// Top-level dispatch: classifies, screens trivially infeasible instances,
// and runs the matching solver. Open and unconstrained shapes come back
// Unsupported. config.mode selects random trials or the derandomized
// family (the latter forwards to derandomized_solve).
SolveResult solve(const ProblemInstance& inst, const SolveConfig& config = {});

// Case-specific entry points; each requires its case (in either order).
// Both bounded: color every edge, r = k1 + k2.
SolveResult solve_short_short(const ProblemInstance& inst, const SolveConfig& config = {});
// Bounded + unbounded: color nearby edges only, r = k1 + (k1+1)^2.
SolveResult solve_constrained_unbounded(const ProblemInstance& inst, const SolveConfig& config = {});
// Bounded + at-least: color nearby edges only, r = k1^2 + 4*k1 + 2*k2.
SolveResult solve_constrained_long(const ProblemInstance& inst, const SolveConfig& config = {});

// ---- shared trial machinery (also drives the derandomized mode) ----

// Everything a trial needs, with the constraint pair already normalized.
struct CasePlan {
  CaseId id{};
  int s1 = 0, t1 = 0, s2 = 0, t2 = 0;  // normalized orientation
  LengthConstraint c1, c2;
  std::vector<int> colorable;
  int exponent = 0;
};
CasePlan plan_case(const ProblemInstance& inst);

// Deterministic whole-graph feasibility screen (reachability and lower
// distance bounds). A returned result is a definitive NoSolution.
std::optional<SolveResult> feasibility_screen(const ProblemInstance& inst,
                                              const CasePlan& plan);

// Runs one trial against a fixed coloring (indexed by edge id, values 1/2;
// size >= edge_id_bound). The first path is searched among color-1 edges,
// the second among color-2. Returns a normalized-order solution.
std::optional<Solution> run_partition_trial(const Graph& g, const CasePlan& plan,
                                            const std::vector<std::uint8_t>& colors,
                                            const SolveConfig& config,
                                            std::uint64_t trial_seed);

// Drives trials 0..total-1, fill(trial, colors) preparing each coloring.
// With config.threads > 1 trials run concurrently; workers claim indices in
// order and the lowest successful index wins, so the outcome is independent
// of thread count. The solution is un-swapped back to instance order.
SolveResult run_colored_trials(const ProblemInstance& inst, const CasePlan& plan,
                               std::uint64_t total,
                               const std::function<void(std::uint64_t, std::vector<std::uint8_t>&)>& fill,
                               const SolveConfig& config);

}  // namespace twopaths
