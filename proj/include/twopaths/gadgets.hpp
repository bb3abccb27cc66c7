#pragma once

#include <span>

#include "twopaths/constraints.hpp"

namespace twopaths {

// Single-path membership question: does g contain a simple (s,t)-path of
// length exactly k?
struct ExactPathInstance {
  Graph graph;
  int s = 0, t = 0;
  int k = 0;
};

// Disjoint union with all sources merged into one vertex and all sinks into
// another; the result has an exact-k path iff some input does. Inputs must
// share k and have s != t; parallel edges created by the merge collapse to
// one (paths never repeat vertices, so multiplicity is irrelevant here).
ExactPathInstance identify_compose(const std::vector<ExactPathInstance>& instances);

// Wraps an exact-path question as a two-path instance: fresh terminals s2,t2
// joined by one fresh edge, constraints (Exactly k, Unbounded). The fresh
// edge is the only (s2,t2)-path and shares nothing, so the answer carries
// over; sizes grow by exactly 2 vertices and 1 edge.
ProblemInstance ppt_from_exact_path(const Graph& g, int s, int t, int k);

// The OR-composition's fixed wiring, declaratively. Two stitched inputs a
// and b hang between eight fresh junction vertices; "long" links become
// fresh chains of length k1+4 so no short budget can afford them.
enum class GadgetNode : std::uint8_t {
  NewS1, NewT1, NewS2, NewT2,  // composed terminals
  U1, U2, V1, V2,              // junctions
  AS1, AT1, AS2, AT2,          // input a's terminals
  BS1, BT1, BS2, BT2,          // input b's terminals
};
struct GadgetLink {
  GadgetNode a, b;
  bool is_long;  // false: single edge; true: chain of length k1+4
};
std::span<const GadgetLink> or_gadget_wiring();

// Composes two instances with equal constraints (first AtMost k1, second
// AtMost k2 or Unbounded) into one that is yes iff either input is. Output
// constraints: (AtMost k1+4, AtMost k2+3*(k1+4)+1) or (AtMost k1+4,
// Unbounded). Throws std::invalid_argument on mismatched inputs.
ProblemInstance or_compose_pair(const ProblemInstance& a, const ProblemInstance& b);

struct CompositionReport {
  int k1_in = 0, k2_in = 0;
  bool second_unbounded = false;
  int inputs = 0;         // instances supplied
  int padded_inputs = 0;  // next power of two
  int levels = 0;         // log2(padded_inputs)
  int k1_out = 0, k2_out = 0;
  std::int64_t vertices_out = 0, edges_out = 0;

  std::string to_key_values() const;
};

// Balanced binary tree of pairwise compositions, padding with no-instances
// up to a power of two. One input comes back unchanged (levels = 0).
// After d levels the bounds are k1 + 4d and k2 + (3*k1+1)*d + 6*d*(d+1).
std::pair<ProblemInstance, CompositionReport> or_compose_many(
    const std::vector<ProblemInstance>& instances);

// Deterministic padding instance with the given constraints and no solution:
// its first terminal pair is disconnected, so no first path exists at all.
ProblemInstance make_no_instance(LengthConstraint c1, LengthConstraint c2);

}  // namespace twopaths
