#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "twopaths/graph.hpp"

namespace twopaths {

enum class BoundKind : std::uint8_t { AtMost, Exactly, AtLeast, Unbounded };

struct LengthConstraint {
  BoundKind kind = BoundKind::Unbounded;
  int k = 0;  // meaningful iff kind != Unbounded; factories keep it 0 there

  static LengthConstraint at_most(int k);
  static LengthConstraint exactly(int k);
  static LengthConstraint at_least(int k);
  static LengthConstraint unbounded() { return {BoundKind::Unbounded, 0}; }

  bool satisfied_by(int length) const;
  bool has_upper_bound() const {
    return kind == BoundKind::AtMost || kind == BoundKind::Exactly;
  }

  // "le 3" / "eq 2" / "ge 1" / "inf", matching the instance file syntax.
  std::string text() const;
  static std::optional<LengthConstraint> from_text(std::string_view text);

  friend bool operator==(const LengthConstraint&, const LengthConstraint&) = default;
};

struct ProblemInstance {
  Graph graph;
  int s1 = 0, t1 = 0;
  int s2 = 0, t2 = 0;
  LengthConstraint c1, c2;
};

struct Solution {
  Path p1, p2;

  friend bool operator==(const Solution&, const Solution&) = default;
};

// The ten shapes a constraint pair can take once ordered by kind
// (AtMost < Exactly < AtLeast < Unbounded). "Short" = AtMost, "Exact" =
// Exactly, "Long" = AtLeast. The two Open* shapes have no known solver and
// are reported as unsupported; Unconstrained is a plain reachability
// question the solver also declines.
enum class CaseKind : std::uint8_t {
  ShortShort,
  ShortExact,
  ExactExact,
  ShortUnbounded,
  ExactUnbounded,
  ShortLong,
  ExactLong,
  OpenLongUnbounded,
  OpenLongLong,
  Unconstrained,
};

struct CaseId {
  CaseKind kind = CaseKind::Unconstrained;
  // true when the pair was exchanged to reach the canonical order; solvers
  // undo the swap before reporting solutions.
  bool swapped = false;

  friend bool operator==(const CaseId&, const CaseId&) = default;
};

CaseId classify_case(LengthConstraint c1, LengthConstraint c2);
bool case_supported(CaseKind kind);
const char* case_name(CaseKind kind);  // "short_short", ...
std::optional<CaseKind> case_from_name(std::string_view name);

struct Violation {
  enum class Kind : std::uint8_t { WrongEndpoint, SharedEdge, LengthViolation };

  Kind kind;
  int which = 0;     // offending path (1 or 2); 0 for a shared edge
  int edge_id = -1;  // SharedEdge
  int actual = -1;   // LengthViolation: observed length
  LengthConstraint constraint;  // LengthViolation: the bound that failed

  std::string describe() const;
};

struct Verdict {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

// Checks endpoints, edge-disjointness, and both length constraints. Paths
// must be structurally valid in inst.graph (Path::from_vertices enforces
// that); sharing vertices is fine, sharing edges is not.
Verdict verify_solution(const ProblemInstance& inst, const Path& p1, const Path& p2);

// Instance file: graph block, then "terminals s1 t1 s2 t2", then
// "c1 <bound>" and "c2 <bound>" where <bound> is "le k", "eq k", "ge k",
// or "inf". Comments and blank lines as in the graph format.
ProblemInstance parse_instance(std::string_view text);
std::string serialize_instance(const ProblemInstance& inst);

// Solution file: two lines of space-separated vertex ids (path 1 then
// path 2), or the single line "NO". parse_solution returns nullopt for the
// "NO" form; structural problems raise ParseError or std::invalid_argument.
std::optional<Solution> parse_solution(const Graph& g, std::string_view text);
std::string serialize_solution(const Solution& sol);

}  // namespace twopaths
