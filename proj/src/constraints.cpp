#include "twopaths/constraints.hpp"

#include <algorithm>
#include <sstream>

#include "text_cursor.hpp"

namespace twopaths {

namespace {

LengthConstraint bounded(BoundKind kind, int k) {
  if (k < 0) throw std::invalid_argument("negative length bound");
  return {kind, k};
}

int kind_rank(BoundKind kind) { return (int)kind; }

}  // namespace

LengthConstraint LengthConstraint::at_most(int k) { return bounded(BoundKind::AtMost, k); }
LengthConstraint LengthConstraint::exactly(int k) { return bounded(BoundKind::Exactly, k); }
LengthConstraint LengthConstraint::at_least(int k) { return bounded(BoundKind::AtLeast, k); }

bool LengthConstraint::satisfied_by(int length) const {
  switch (kind) {
    case BoundKind::AtMost: return length <= k;
    case BoundKind::Exactly: return length == k;
    case BoundKind::AtLeast: return length >= k;
    case BoundKind::Unbounded: return true;
  }
  return false;
}

std::string LengthConstraint::text() const {
  switch (kind) {
    case BoundKind::AtMost: return "le " + std::to_string(k);
    case BoundKind::Exactly: return "eq " + std::to_string(k);
    case BoundKind::AtLeast: return "ge " + std::to_string(k);
    case BoundKind::Unbounded: return "inf";
  }
  return {};
}

std::optional<LengthConstraint> LengthConstraint::from_text(std::string_view text) {
  auto tokens = detail::split_tokens(text);
  if (tokens.size() == 1 && tokens[0] == "inf") return unbounded();
  if (tokens.size() != 2) return std::nullopt;
  int k = 0;
  try {
    k = (int)detail::parse_int_token(tokens[1], 0, "length bound");
  } catch (const ParseError&) {
    return std::nullopt;
  }
  if (tokens[0] == "le") return at_most(k);
  if (tokens[0] == "eq") return exactly(k);
  if (tokens[0] == "ge") return at_least(k);
  return std::nullopt;
}

CaseId classify_case(LengthConstraint c1, LengthConstraint c2) {
  bool swapped = kind_rank(c1.kind) > kind_rank(c2.kind);
  if (swapped) std::swap(c1, c2);
  CaseKind kind = CaseKind::Unconstrained;
  switch (c1.kind) {
    case BoundKind::AtMost:
      switch (c2.kind) {
        case BoundKind::AtMost: kind = CaseKind::ShortShort; break;
        case BoundKind::Exactly: kind = CaseKind::ShortExact; break;
        case BoundKind::AtLeast: kind = CaseKind::ShortLong; break;
        case BoundKind::Unbounded: kind = CaseKind::ShortUnbounded; break;
      }
      break;
    case BoundKind::Exactly:
      switch (c2.kind) {
        case BoundKind::Exactly: kind = CaseKind::ExactExact; break;
        case BoundKind::AtLeast: kind = CaseKind::ExactLong; break;
        case BoundKind::Unbounded: kind = CaseKind::ExactUnbounded; break;
        default: break;
      }
      break;
    case BoundKind::AtLeast:
      kind = c2.kind == BoundKind::AtLeast ? CaseKind::OpenLongLong
                                           : CaseKind::OpenLongUnbounded;
      break;
    case BoundKind::Unbounded:
      kind = CaseKind::Unconstrained;
      break;
  }
  return {kind, swapped};
}

bool case_supported(CaseKind kind) {
  switch (kind) {
    case CaseKind::ShortShort:
    case CaseKind::ShortExact:
    case CaseKind::ExactExact:
    case CaseKind::ShortUnbounded:
    case CaseKind::ExactUnbounded:
    case CaseKind::ShortLong:
    case CaseKind::ExactLong:
      return true;
    case CaseKind::OpenLongUnbounded:
    case CaseKind::OpenLongLong:
    case CaseKind::Unconstrained:
      return false;
  }
  return false;
}

const char* case_name(CaseKind kind) {
  switch (kind) {
    case CaseKind::ShortShort: return "short_short";
    case CaseKind::ShortExact: return "short_exact";
    case CaseKind::ExactExact: return "exact_exact";
    case CaseKind::ShortUnbounded: return "short_unbounded";
    case CaseKind::ExactUnbounded: return "exact_unbounded";
    case CaseKind::ShortLong: return "short_long";
    case CaseKind::ExactLong: return "exact_long";
    case CaseKind::OpenLongUnbounded: return "open_long_unbounded";
    case CaseKind::OpenLongLong: return "open_long_long";
    case CaseKind::Unconstrained: return "unconstrained";
  }
  return "?";
}

std::optional<CaseKind> case_from_name(std::string_view name) {
  for (int i = 0; i <= (int)CaseKind::Unconstrained; ++i) {
    auto kind = (CaseKind)i;
    if (name == case_name(kind)) return kind;
  }
  return std::nullopt;
}

std::string Violation::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::WrongEndpoint:
      out << "path " << which << " does not join its terminal pair";
      break;
    case Kind::SharedEdge:
      out << "edge " << edge_id << " used by both paths";
      break;
    case Kind::LengthViolation:
      out << "path " << which << " has length " << actual << ", needs "
          << constraint.text();
      break;
  }
  return out.str();
}

Verdict verify_solution(const ProblemInstance& inst, const Path& p1, const Path& p2) {
  Verdict verdict;
  if (p1.source() != inst.s1 || p1.target() != inst.t1) {
    verdict.violations.push_back({Violation::Kind::WrongEndpoint, 1, -1, -1, {}});
  }
  if (p2.source() != inst.s2 || p2.target() != inst.t2) {
    verdict.violations.push_back({Violation::Kind::WrongEndpoint, 2, -1, -1, {}});
  }
  std::vector<int> first = p1.edge_ids();
  std::sort(first.begin(), first.end());
  std::vector<int> shared;
  for (int id : p2.edge_ids()) {
    if (std::binary_search(first.begin(), first.end(), id)) shared.push_back(id);
  }
  std::sort(shared.begin(), shared.end());
  for (int id : shared) {
    verdict.violations.push_back({Violation::Kind::SharedEdge, 0, id, -1, {}});
  }
  if (!inst.c1.satisfied_by(p1.length())) {
    verdict.violations.push_back(
        {Violation::Kind::LengthViolation, 1, -1, p1.length(), inst.c1});
  }
  if (!inst.c2.satisfied_by(p2.length())) {
    verdict.violations.push_back(
        {Violation::Kind::LengthViolation, 2, -1, p2.length(), inst.c2});
  }
  return verdict;
}

namespace {

LengthConstraint parse_constraint_line(detail::TextCursor& cursor, const char* label) {
  std::string_view line;
  if (!cursor.next_line(line)) {
    throw ParseError(ParseError::Kind::UnexpectedEnd, cursor.line_no + 1,
                     std::string("missing ") + label + " line");
  }
  auto tokens = detail::split_tokens(line);
  if (tokens.empty() || tokens[0] != label) {
    throw ParseError(ParseError::Kind::BadToken, cursor.line_no,
                     std::string("expected '") + label + " <bound>'");
  }
  std::size_t skip = std::string_view(label).size();
  std::size_t at = line.find(label);
  auto rest = line.substr(at + skip);
  auto parsed = LengthConstraint::from_text(rest);
  if (!parsed) {
    throw ParseError(ParseError::Kind::BadToken, cursor.line_no,
                     "bound must be 'le k', 'eq k', 'ge k', or 'inf'");
  }
  return *parsed;
}

}  // namespace

ProblemInstance parse_instance(std::string_view text) {
  detail::TextCursor cursor{text};
  ProblemInstance inst;
  inst.graph = detail::parse_graph_block(cursor);

  std::string_view line;
  if (!cursor.next_line(line)) {
    throw ParseError(ParseError::Kind::UnexpectedEnd, cursor.line_no + 1,
                     "missing terminals line");
  }
  auto tokens = detail::split_tokens(line);
  if (tokens.size() != 5 || tokens[0] != "terminals") {
    throw ParseError(ParseError::Kind::BadToken, cursor.line_no,
                     "expected 'terminals s1 t1 s2 t2'");
  }
  int* slots[4] = {&inst.s1, &inst.t1, &inst.s2, &inst.t2};
  for (int i = 0; i < 4; ++i) {
    long long v = detail::parse_int_token(tokens[(std::size_t)i + 1], cursor.line_no, "terminal");
    if (v >= inst.graph.vertex_count()) {
      throw ParseError(ParseError::Kind::VertexOutOfRange, cursor.line_no,
                       "terminal " + std::to_string(v) + " out of range");
    }
    *slots[i] = (int)v;
  }

  inst.c1 = parse_constraint_line(cursor, "c1");
  inst.c2 = parse_constraint_line(cursor, "c2");

  std::string_view extra;
  if (cursor.next_line(extra)) {
    throw ParseError(ParseError::Kind::BadToken, cursor.line_no,
                     "unexpected input after constraints");
  }
  return inst;
}

std::string serialize_instance(const ProblemInstance& inst) {
  std::ostringstream out;
  out << serialize_graph(inst.graph);
  out << "terminals " << inst.s1 << ' ' << inst.t1 << ' ' << inst.s2 << ' '
      << inst.t2 << '\n';
  out << "c1 " << inst.c1.text() << '\n';
  out << "c2 " << inst.c2.text() << '\n';
  return out.str();
}

std::optional<Solution> parse_solution(const Graph& g, std::string_view text) {
  detail::TextCursor cursor{text};
  std::string_view line;
  if (!cursor.next_line(line)) {
    throw ParseError(ParseError::Kind::UnexpectedEnd, cursor.line_no + 1,
                     "empty solution file");
  }
  auto first = detail::split_tokens(line);
  if (first.size() == 1 && first[0] == "NO") {
    std::string_view extra;
    if (cursor.next_line(extra)) {
      throw ParseError(ParseError::Kind::BadToken, cursor.line_no,
                       "unexpected input after NO");
    }
    return std::nullopt;
  }
  auto read_path = [&](const std::vector<std::string_view>& tokens, int line_no) {
    std::vector<int> vertices;
    vertices.reserve(tokens.size());
    for (auto token : tokens) {
      vertices.push_back((int)detail::parse_int_token(token, line_no, "path vertex"));
    }
    return Path::from_vertices(g, std::move(vertices));
  };
  Path p1 = read_path(first, cursor.line_no);
  if (!cursor.next_line(line)) {
    throw ParseError(ParseError::Kind::UnexpectedEnd, cursor.line_no + 1,
                     "missing second path line");
  }
  Path p2 = read_path(detail::split_tokens(line), cursor.line_no);
  std::string_view extra;
  if (cursor.next_line(extra)) {
    throw ParseError(ParseError::Kind::BadToken, cursor.line_no,
                     "unexpected input after second path");
  }
  return Solution{std::move(p1), std::move(p2)};
}

std::string serialize_solution(const Solution& sol) {
  std::ostringstream out;
  auto line = [&](const Path& p) {
    for (std::size_t i = 0; i < p.vertices().size(); ++i) {
      if (i) out << ' ';
      out << p.vertices()[i];
    }
    out << '\n';
  };
  line(sol.p1);
  line(sol.p2);
  return out.str();
}

}  // namespace twopaths
