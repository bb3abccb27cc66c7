#include "twopaths/path_engine.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "twopaths/rng.hpp"

namespace twopaths {

GraphTooLargeForExactLongPath::GraphTooLargeForExactLongPath(int cap, std::uint64_t budget)
    : std::runtime_error(
          "graph too large for exact long-path search (vertex cap " +
          std::to_string(cap) + ", node budget " + std::to_string(budget) + ")"),
      cap(cap),
      budget(budget) {}

namespace {

// Pinned well below what subset DP tables can address; trial budgets past
// this are astronomical regardless.
constexpr int kMaxExactLength = 20;
// Subset-DP threshold for the exact-length search (the long-path search has
// its own configurable cap).
constexpr int kExactDpVertexCap = 20;

// A vertex subset of the host graph with filtered local adjacency.
// verts must be ascending so local adjacency inherits the host's order.
struct LocalView {
  std::vector<int> verts;             // local index -> global vertex
  std::vector<std::vector<int>> adj;  // local neighbors, ascending
  int s = -1, t = -1;                 // local endpoints
};

LocalView make_local(const Graph& g, const std::vector<int>& verts,
                     int s_global, int t_global, EdgeFilter filter) {
  LocalView view;
  view.verts = verts;
  std::vector<int> local((std::size_t)g.vertex_count(), -1);
  for (int i = 0; i < (int)verts.size(); ++i) local[(std::size_t)verts[i]] = i;
  view.adj.resize(verts.size());
  for (int i = 0; i < (int)verts.size(); ++i) {
    for (auto [w, eid] : g.neighbors(verts[(std::size_t)i])) {
      if (filter.allows(eid) && local[(std::size_t)w] >= 0) {
        view.adj[(std::size_t)i].push_back(local[(std::size_t)w]);
      }
    }
  }
  view.s = local[(std::size_t)s_global];
  view.t = local[(std::size_t)t_global];
  return view;
}

Path to_global_path(const Graph& g, const LocalView& view, const std::vector<int>& locals) {
  std::vector<int> verts;
  verts.reserve(locals.size());
  for (int v : locals) verts.push_back(view.verts[(std::size_t)v]);
  return Path::from_vertices(g, std::move(verts));
}

// dp[S] = bitmask of endpoints v for which a simple path from view.s covers
// exactly the vertex set S and ends at v. Sets are not grown past
// max_vertices vertices.
std::vector<std::uint32_t> subset_dp(const LocalView& view, int max_vertices) {
  int n = (int)view.verts.size();
  std::vector<std::uint32_t> dp((std::size_t)1 << n, 0);
  dp[(std::size_t)1 << view.s] = 1u << view.s;
  for (std::uint32_t set = 1; set < ((std::uint32_t)1 << n); ++set) {
    std::uint32_t ends = dp[set];
    if (!ends || (int)std::popcount(set) >= max_vertices) continue;
    while (ends) {
      int v = std::countr_zero(ends);
      ends &= ends - 1;
      for (int w : view.adj[(std::size_t)v]) {
        if (set & (1u << w)) continue;
        dp[set | (1u << w)] |= 1u << w;
      }
    }
  }
  return dp;
}

// Walks a dp witness backwards; always takes the smallest usable neighbor.
std::vector<int> reconstruct_subset(const LocalView& view,
                                    const std::vector<std::uint32_t>& dp,
                                    std::uint32_t set, int end) {
  std::vector<int> reversed{end};
  int cur = end;
  while (set != (1u << view.s) || cur != view.s) {
    std::uint32_t prev = set & ~(1u << cur);
    int step = -1;
    for (int u : view.adj[(std::size_t)cur]) {
      if (((prev >> u) & 1u) && ((dp[prev] >> u) & 1u)) {
        step = u;
        break;
      }
    }
    set = prev;
    cur = step;
    reversed.push_back(cur);
  }
  std::reverse(reversed.begin(), reversed.end());
  return reversed;
}

std::optional<Path> exact_via_subset_dp(const Graph& g, const LocalView& view, int k) {
  auto dp = subset_dp(view, k + 1);
  for (std::uint32_t set = 0; set < (std::uint32_t)dp.size(); ++set) {
    if ((int)std::popcount(set) != k + 1) continue;
    if ((dp[set] >> view.t) & 1u) {
      return to_global_path(g, view, reconstruct_subset(view, dp, set, view.t));
    }
  }
  return std::nullopt;
}

std::optional<Path> at_least_via_subset_dp(const Graph& g, const LocalView& view, int k) {
  auto dp = subset_dp(view, (int)view.verts.size());
  int best_size = -1;
  std::uint32_t best_set = 0;
  for (std::uint32_t set = 0; set < (std::uint32_t)dp.size(); ++set) {
    if (!((dp[set] >> view.t) & 1u)) continue;
    int size = (int)std::popcount(set);
    if (size - 1 < k) continue;
    if (best_size < 0 || size < best_size) {
      best_size = size;
      best_set = set;
    }
  }
  if (best_size < 0) return std::nullopt;
  return to_global_path(g, view, reconstruct_subset(view, dp, best_set, view.t));
}

std::uint64_t color_coding_trials(int k, double delta) {
  // Per-trial success is at least (k+1)!/(k+1)^(k+1) > e^-(k+1), so
  // ceil(e^(k+1) ln(1/delta)) trials push the miss rate below delta.
  long double need = std::ceil(std::exp((long double)(k + 1)) * std::log(1.0L / (long double)delta));
  if (need < 1.0L) return 1;
  if (need > 9.0e18L) return (std::uint64_t)9.0e18L;
  return (std::uint64_t)need;
}

std::optional<Path> exact_via_color_coding(const Graph& g, const LocalView& view,
                                           int k, double delta, std::uint64_t seed) {
  const int n = (int)view.verts.size();
  const int palette = k + 1;
  const int words = (n + 63) / 64;
  const std::size_t sets = (std::size_t)1 << palette;
  if (sets * (std::size_t)words > ((std::size_t)16 << 20)) {
    // 128 MB of table; past this the trial budget is unusable anyway.
    throw std::invalid_argument("exact-length search out of configured range");
  }
  std::vector<std::uint64_t> dp(sets * (std::size_t)words);
  std::vector<std::uint8_t> color((std::size_t)n);
  const std::uint64_t trials = color_coding_trials(k, delta);

  auto bit = [&](std::uint32_t set, int v) -> bool {
    return (dp[(std::size_t)set * (std::size_t)words + (std::size_t)(v >> 6)] >>
            (v & 63)) & 1u;
  };
  auto mark = [&](std::uint32_t set, int v) {
    dp[(std::size_t)set * (std::size_t)words + (std::size_t)(v >> 6)] |=
        1ull << (v & 63);
  };

  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    SplitMix64 rng(derive_seed(seed, trial));
    for (int v = 0; v < n; ++v) color[(std::size_t)v] = (std::uint8_t)rng.below((std::uint64_t)palette);
    // Endpoints of any colorful path carry distinct colors (k >= 1 here).
    if (color[(std::size_t)view.s] == color[(std::size_t)view.t]) continue;

    std::fill(dp.begin(), dp.end(), 0);
    mark(1u << color[(std::size_t)view.s], view.s);
    std::uint32_t winner_set = 0;
    for (std::uint32_t set = 1; set < (std::uint32_t)sets && !winner_set; ++set) {
      if ((int)std::popcount(set) >= palette) continue;
      for (int word = 0; word < words && !winner_set; ++word) {
        std::uint64_t ends = dp[(std::size_t)set * (std::size_t)words + (std::size_t)word];
        while (ends) {
          int v = (word << 6) + std::countr_zero(ends);
          ends &= ends - 1;
          for (int w : view.adj[(std::size_t)v]) {
            std::uint32_t cw = 1u << color[(std::size_t)w];
            if (set & cw) continue;
            mark(set | cw, w);
            if (w == view.t && (int)std::popcount(set) + 1 == palette) {
              winner_set = set | cw;
              break;
            }
          }
          if (winner_set) break;
        }
      }
    }
    if (!winner_set) continue;

    // Backwards over color classes, smallest usable neighbor first.
    std::vector<int> reversed{view.t};
    int cur = view.t;
    std::uint32_t set = winner_set;
    while (std::popcount(set) > 1) {
      std::uint32_t prev = set & ~(1u << color[(std::size_t)cur]);
      int step = -1;
      for (int u : view.adj[(std::size_t)cur]) {
        if ((prev >> color[(std::size_t)u]) & 1u && bit(prev, u)) {
          step = u;
          break;
        }
      }
      set = prev;
      cur = step;
      reversed.push_back(cur);
    }
    std::reverse(reversed.begin(), reversed.end());
    return to_global_path(g, view, reversed);
  }
  return std::nullopt;
}

void check_endpoints(const Graph& g, int s, int t) {
  if (!g.has_vertex(s) || !g.has_vertex(t)) {
    throw std::invalid_argument("path endpoint out of range");
  }
}

std::optional<Path> at_least_via_dfs(const Graph& g, int s, int t, int k,
                                     const LongPathLimits& limits, EdgeFilter filter) {
  const int n = g.vertex_count();
  std::vector<std::uint8_t> on_path((std::size_t)n, 0);
  std::vector<int> path{s};
  on_path[(std::size_t)s] = 1;

  struct Frame {
    int vertex;
    std::size_t next;
  };
  std::vector<Frame> stack{{s, 0}};
  std::uint64_t expansions = 0;

  // Stamped scratch for the per-node reachability bound.
  std::vector<int> mark((std::size_t)n, 0);
  std::vector<int> queue;
  int stamp = 0;

  auto pop_frame = [&]() {
    on_path[(std::size_t)path.back()] = 0;
    path.pop_back();
    stack.pop_back();
  };

  while (!stack.empty()) {
    Frame& frame = stack.back();
    int cur = frame.vertex;
    if (frame.next == 0) {
      if (cur == t) {
        // Simple (s,t)-paths end here; too short means backtrack, not fail.
        if ((int)path.size() - 1 >= k) return Path::from_vertices(g, path);
        pop_frame();
        continue;
      }
      if (++expansions > limits.dfs_node_budget) {
        throw GraphTooLargeForExactLongPath(limits.exact_vertex_cap,
                                            limits.dfs_node_budget);
      }
      // Bound: every future vertex lies in the unvisited region reachable
      // from cur, and each adds one edge. Prune when even that misses k, or
      // when t is cut off.
      ++stamp;
      queue.clear();
      queue.push_back(cur);
      mark[(std::size_t)cur] = stamp;
      int reachable = 0;
      bool t_reachable = false;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (auto [w, eid] : g.neighbors(queue[head])) {
          if (!filter.allows(eid) || on_path[(std::size_t)w] ||
              mark[(std::size_t)w] == stamp) {
            continue;
          }
          mark[(std::size_t)w] = stamp;
          queue.push_back(w);
          ++reachable;
          if (w == t) t_reachable = true;
        }
      }
      if (!t_reachable || (int)path.size() - 1 + reachable < k) {
        pop_frame();
        continue;
      }
    }
    bool descended = false;
    const auto& nbrs = g.neighbors(cur);
    while (frame.next < nbrs.size()) {
      auto [w, eid] = nbrs[frame.next++];
      if (!filter.allows(eid) || on_path[(std::size_t)w]) continue;
      on_path[(std::size_t)w] = 1;
      path.push_back(w);
      stack.push_back({w, 0});
      descended = true;
      break;
    }
    if (!descended) pop_frame();
  }
  return std::nullopt;
}

}  // namespace

std::optional<Path> find_path_at_most(const Graph& g, int s, int t, int k,
                                      EdgeFilter filter) {
  check_endpoints(g, s, t);
  if (k < 0) throw std::invalid_argument("negative length bound");
  auto sp = shortest_path(g, s, t, filter);
  if (sp && sp->length() <= k) return sp;
  return std::nullopt;
}

std::optional<Path> find_path_exact(const Graph& g, int s, int t, int k,
                                    double delta, std::uint64_t seed,
                                    EdgeFilter filter) {
  check_endpoints(g, s, t);
  if (k < 0) throw std::invalid_argument("negative length bound");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must be in (0,1)");
  if (k > kMaxExactLength) {
    throw std::invalid_argument("exact-length search supports k <= " +
                                std::to_string(kMaxExactLength));
  }
  if (s == t) return k == 0 ? std::optional<Path>(Path::single(s)) : std::nullopt;
  if (k == 0) return std::nullopt;

  auto ds = bfs_distances(g, s, filter);
  if (!ds.reachable(t) || ds.at(t) > k) return std::nullopt;
  auto dt = bfs_distances(g, t, filter);
  // Only vertices on some walk of total length <= k can sit on a witness.
  std::vector<int> envelope;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (ds.reachable(v) && dt.reachable(v) && ds.at(v) + dt.at(v) <= k) {
      envelope.push_back(v);
    }
  }
  if ((int)envelope.size() < k + 1) return std::nullopt;
  LocalView view = make_local(g, envelope, s, t, filter);
  if ((int)envelope.size() <= kExactDpVertexCap) {
    return exact_via_subset_dp(g, view, k);
  }
  return exact_via_color_coding(g, view, k, delta, seed);
}

std::optional<Path> find_path_at_least(const Graph& g, int s, int t, int k,
                                       const LongPathLimits& limits, EdgeFilter filter) {
  check_endpoints(g, s, t);
  if (k < 0) throw std::invalid_argument("negative length bound");
  auto sp = shortest_path(g, s, t, filter);
  if (!sp) return std::nullopt;
  if (sp->length() >= k) return sp;
  if (s == t) return std::nullopt;  // only the zero-length path exists

  auto ds = bfs_distances(g, s, filter);
  std::vector<int> component;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (ds.reachable(v)) component.push_back(v);
  }
  if (k > (int)component.size() - 1) return std::nullopt;
  if ((int)component.size() <= limits.exact_vertex_cap) {
    LocalView view = make_local(g, component, s, t, filter);
    return at_least_via_subset_dp(g, view, k);
  }
  return at_least_via_dfs(g, s, t, k, limits, filter);
}

std::optional<Path> any_path(const Graph& g, int s, int t, EdgeFilter filter) {
  check_endpoints(g, s, t);
  return shortest_path(g, s, t, filter);
}

}  // namespace twopaths
