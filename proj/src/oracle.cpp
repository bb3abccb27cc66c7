#include "twopaths/oracle.hpp"

#include <algorithm>

namespace twopaths {

InstanceTooLargeForOracle::InstanceTooLargeForOracle(int max_vertices,
                                                     std::uint64_t max_steps)
    : std::runtime_error("instance exceeds oracle limits (max vertices " +
                         std::to_string(max_vertices) + ", max steps " +
                         std::to_string(max_steps) + ")"),
      max_vertices(max_vertices),
      max_steps(max_steps) {}

namespace {

// Iterative DFS over simple (s,t)-paths, ascending neighbor order. visit is
// called with (vertices, edge_ids) for each path whose length is within
// max_len (shared by reference so callers may shrink it mid-walk; negative
// means unbounded) and returns false to stop the walk. Each accepted edge
// expansion counts one step; returns false iff the step budget ran out.
template <class Visit>
bool walk_paths(const Graph& g, int s, int t, const int& max_len,
                std::uint64_t& steps, std::uint64_t max_steps,
                EdgeFilter filter, Visit&& visit) {
  if (s == t) {
    visit(std::vector<int>{s}, std::vector<int>{});
    return true;
  }
  struct Frame {
    int vertex;
    std::size_t next;
  };
  std::vector<std::uint8_t> on_path((std::size_t)g.vertex_count(), 0);
  std::vector<int> verts{s};
  std::vector<int> eids;
  std::vector<Frame> stack{{s, 0}};
  on_path[(std::size_t)s] = 1;

  while (!stack.empty()) {
    Frame& frame = stack.back();
    int cur = frame.vertex;
    bool descended = false;
    const int cap = max_len < 0 ? g.vertex_count() - 1 : max_len;
    if ((int)eids.size() < cap) {
      const auto& nbrs = g.neighbors(cur);
      while (frame.next < nbrs.size()) {
        auto [w, eid] = nbrs[frame.next++];
        if (!filter.allows(eid) || on_path[(std::size_t)w]) continue;
        if (++steps > max_steps) return false;
        if (w == t) {
          verts.push_back(w);
          eids.push_back(eid);
          bool keep_going = visit(verts, eids);
          verts.pop_back();
          eids.pop_back();
          if (!keep_going) return true;
          continue;  // t is an endpoint, never an interior vertex
        }
        on_path[(std::size_t)w] = 1;
        verts.push_back(w);
        eids.push_back(eid);
        stack.push_back({w, 0});
        descended = true;
        break;
      }
    }
    if (descended) continue;
    on_path[(std::size_t)verts.back()] = 0;
    verts.pop_back();
    if (!eids.empty()) eids.pop_back();
    stack.pop_back();
  }
  return true;
}

int upper_cap(LengthConstraint c, const Graph& g) {
  return c.has_upper_bound() ? c.k : g.vertex_count() - 1;
}

}  // namespace

PathEnumeration enumerate_paths(const Graph& g, int s, int t, const EnumCaps& caps) {
  if (!g.has_vertex(s) || !g.has_vertex(t)) {
    throw std::invalid_argument("path endpoint out of range");
  }
  PathEnumeration out;
  std::uint64_t steps = 0;
  bool hit_cap = false;
  const int max_len = caps.max_len;
  bool finished = walk_paths(
      g, s, t, max_len, steps, caps.max_steps, {},
      [&](const std::vector<int>& verts, const std::vector<int>&) {
        if ((std::uint64_t)out.paths.size() == caps.max_paths) {
          hit_cap = true;
          return false;
        }
        out.paths.push_back(Path::from_vertices(g, verts));
        return true;
      });
  out.truncated = hit_cap || !finished;
  return out;
}

std::optional<Solution> oracle_solve(const ProblemInstance& inst, const OracleLimits& limits) {
  const Graph& g = inst.graph;
  if (g.vertex_count() > limits.max_vertices) {
    throw InstanceTooLargeForOracle(limits.max_vertices, limits.max_steps);
  }
  std::uint64_t steps = 0;
  std::optional<Solution> found;
  const int cap1 = upper_cap(inst.c1, g);
  const int cap2 = upper_cap(inst.c2, g);
  bool finished = walk_paths(
      g, inst.s1, inst.t1, cap1, steps, limits.max_steps, {},
      [&](const std::vector<int>& verts1, const std::vector<int>& eids1) {
        if (!inst.c1.satisfied_by((int)eids1.size())) return true;
        Graph rest = remove_edges(g, eids1);
        bool inner_ok = walk_paths(
            rest, inst.s2, inst.t2, cap2, steps, limits.max_steps, {},
            [&](const std::vector<int>& verts2, const std::vector<int>& eids2) {
              if (!inst.c2.satisfied_by((int)eids2.size())) return true;
              found = Solution{Path::from_vertices(g, verts1),
                               Path::from_vertices(g, verts2)};
              return false;
            });
        if (!inner_ok) throw InstanceTooLargeForOracle(limits.max_vertices, limits.max_steps);
        return !found.has_value();
      });
  if (!finished) throw InstanceTooLargeForOracle(limits.max_vertices, limits.max_steps);
  return found;
}

std::optional<Path> minimal_valid_partner(const Graph& g, const Path& p1, int s2,
                                          int t2, LengthConstraint c2,
                                          const OracleLimits& limits) {
  if (g.vertex_count() > limits.max_vertices) {
    throw InstanceTooLargeForOracle(limits.max_vertices, limits.max_steps);
  }
  if (!g.has_vertex(s2) || !g.has_vertex(t2)) {
    throw std::invalid_argument("partner endpoint out of range");
  }
  Graph rest = remove_edges(g, p1.edge_ids());

  // No-lower-bound constraints are settled by a shortest path outright.
  if (c2.kind == BoundKind::Unbounded || c2.kind == BoundKind::AtMost) {
    auto sp = shortest_path(rest, s2, t2);
    if (sp && c2.satisfied_by(sp->length())) {
      return Path::from_vertices(g, sp->vertices());
    }
    return std::nullopt;
  }

  std::uint64_t steps = 0;
  std::optional<Path> best;
  // For Exactly every valid partner has length k, so the first hit wins; for
  // AtLeast the cap shrinks to best-1 as hits arrive, and a hit at exactly k
  // cannot be beaten.
  int cap = upper_cap(c2, g);
  bool finished = walk_paths(
      rest, s2, t2, cap, steps, limits.max_steps, {},
      [&](const std::vector<int>& verts, const std::vector<int>& eids) {
        int len = (int)eids.size();
        if (!c2.satisfied_by(len)) return true;
        if (!best || len < best->length()) {
          best = Path::from_vertices(g, verts);
          if (c2.kind == BoundKind::Exactly || len == c2.k) return false;
          cap = len - 1;
        }
        return true;
      });
  if (!finished) throw InstanceTooLargeForOracle(limits.max_vertices, limits.max_steps);
  return best;
}

}  // namespace twopaths
