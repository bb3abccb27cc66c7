#include "twopaths/instance_gen.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "twopaths/rng.hpp"

namespace twopaths {

const char* terminal_rule_name(TerminalRule rule) {
  switch (rule) {
    case TerminalRule::Distinct: return "distinct";
    case TerminalRule::Coincident: return "coincident";
    case TerminalRule::CrossingCycle: return "crossing";
  }
  return "?";
}

std::optional<TerminalRule> terminal_rule_from_name(std::string_view name) {
  if (name == "distinct") return TerminalRule::Distinct;
  if (name == "coincident") return TerminalRule::Coincident;
  if (name == "crossing") return TerminalRule::CrossingCycle;
  return std::nullopt;
}

namespace {

std::uint64_t pair_key(int u, int v) {
  return ((std::uint64_t)std::min(u, v) << 32) | (std::uint64_t)std::max(u, v);
}

// m distinct unordered pairs over 0..n-1, excluding `used`, uniformly.
// Enumeration plus a partial shuffle when the pair space is small; rejection
// sampling (guaranteed sparse enough to converge) otherwise.
std::vector<std::pair<int, int>> sample_pairs(int n, long long m,
                                              const std::unordered_set<std::uint64_t>& used,
                                              SplitMix64& rng) {
  const long long total = (long long)n * (n - 1) / 2 - (long long)used.size();
  if (m > total) throw std::invalid_argument("more edges requested than pairs available");
  std::vector<std::pair<int, int>> out;
  out.reserve((std::size_t)m);
  if ((long long)n * (n - 1) / 2 <= 2'000'000) {
    std::vector<std::pair<int, int>> pool;
    pool.reserve((std::size_t)((long long)n * (n - 1) / 2 - (long long)used.size()));
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (!used.count(pair_key(u, v))) pool.push_back({u, v});
      }
    }
    for (long long i = 0; i < m; ++i) {
      std::size_t j = (std::size_t)i + (std::size_t)rng.below((std::uint64_t)(pool.size() - (std::size_t)i));
      std::swap(pool[(std::size_t)i], pool[j]);
      out.push_back(pool[(std::size_t)i]);
    }
    return out;
  }
  std::unordered_set<std::uint64_t> taken = used;
  while ((long long)out.size() < m) {
    int u = (int)rng.below((std::uint64_t)n);
    int v = (int)rng.below((std::uint64_t)n);
    if (u == v) continue;
    std::uint64_t key = pair_key(u, v);
    if (!taken.insert(key).second) continue;
    out.push_back({std::min(u, v), std::max(u, v)});
  }
  return out;
}

std::vector<int> sample_distinct(int count, int n, SplitMix64& rng) {
  std::vector<int> picks;
  picks.reserve((std::size_t)count);
  while ((int)picks.size() < count) {
    int v = (int)rng.below((std::uint64_t)n);
    if (std::find(picks.begin(), picks.end(), v) == picks.end()) picks.push_back(v);
  }
  return picks;
}

}  // namespace

ProblemInstance gen_random(int n, int m, TerminalRule rule, LengthConstraint c1,
                           LengthConstraint c2, std::uint64_t seed) {
  if (n < 4) throw std::invalid_argument("need at least 4 vertices for terminal rules");
  if (m < 0) throw std::invalid_argument("negative edge count");
  if ((long long)m > (long long)n * (n - 1) / 2) {
    throw std::invalid_argument("edge count exceeds the simple-graph maximum");
  }

  SplitMix64 edge_rng(derive_seed(seed, 1));
  auto edges = sample_pairs(n, m, {}, edge_rng);
  ProblemInstance inst;
  inst.graph = Graph::build(n, edges);

  SplitMix64 terminal_rng(derive_seed(seed, 2));
  auto picks = sample_distinct(4, n, terminal_rng);
  switch (rule) {
    case TerminalRule::Distinct:
      inst.s1 = picks[0];
      inst.t1 = picks[1];
      inst.s2 = picks[2];
      inst.t2 = picks[3];
      break;
    case TerminalRule::Coincident:
      inst.s1 = inst.s2 = picks[0];
      inst.t1 = inst.t2 = picks[1];
      break;
    case TerminalRule::CrossingCycle: {
      std::sort(picks.begin(), picks.end());
      inst.s1 = picks[0];
      inst.t1 = picks[2];
      inst.s2 = picks[1];
      inst.t2 = picks[3];
      break;
    }
  }
  inst.c1 = c1;
  inst.c2 = c2;
  return inst;
}

std::pair<LengthConstraint, LengthConstraint> constraints_for_case(CaseKind kind,
                                                                   int k1, int k2) {
  switch (kind) {
    case CaseKind::ShortShort:
      return {LengthConstraint::at_most(k1), LengthConstraint::at_most(k2)};
    case CaseKind::ShortExact:
      return {LengthConstraint::at_most(k1), LengthConstraint::exactly(k2)};
    case CaseKind::ExactExact:
      return {LengthConstraint::exactly(k1), LengthConstraint::exactly(k2)};
    case CaseKind::ShortUnbounded:
      return {LengthConstraint::at_most(k1), LengthConstraint::unbounded()};
    case CaseKind::ExactUnbounded:
      return {LengthConstraint::exactly(k1), LengthConstraint::unbounded()};
    case CaseKind::ShortLong:
      return {LengthConstraint::at_most(k1), LengthConstraint::at_least(k2)};
    case CaseKind::ExactLong:
      return {LengthConstraint::exactly(k1), LengthConstraint::at_least(k2)};
    default:
      throw std::invalid_argument("no constraint pair for unsupported case");
  }
}

std::pair<ProblemInstance, Solution> gen_planted(const PlantedShape& shape,
                                                 std::uint64_t seed) {
  if (shape.k1 < 0 || shape.k2 < 0 || shape.extra_n < 0 || shape.extra_m < 0) {
    throw std::invalid_argument("negative planted parameter");
  }
  auto [c1, c2] = constraints_for_case(shape.kind, shape.k1, shape.k2);
  const int len1 = shape.k1;
  const int len2 = c2.kind == BoundKind::Unbounded ? std::max(shape.k2, 1) : shape.k2;

  const int n = (len1 + 1) + (len2 + 1) + shape.extra_n;
  std::vector<int> path1((std::size_t)len1 + 1);
  std::iota(path1.begin(), path1.end(), 0);
  std::vector<int> path2((std::size_t)len2 + 1);
  std::iota(path2.begin(), path2.end(), len1 + 1);

  std::vector<std::pair<int, int>> edges;
  std::unordered_set<std::uint64_t> used;
  auto lay = [&](const std::vector<int>& path) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      edges.push_back({path[i], path[i + 1]});
      used.insert(pair_key(path[i], path[i + 1]));
    }
  };
  lay(path1);
  lay(path2);

  SplitMix64 decoy_rng(derive_seed(seed, 3));
  for (auto [u, v] : sample_pairs(n, shape.extra_m, used, decoy_rng)) {
    edges.push_back({u, v});
  }

  // Shuffle labels so planted structure is not recognizable by vertex order.
  SplitMix64 label_rng(derive_seed(seed, 4));
  std::vector<int> relabel((std::size_t)n);
  std::iota(relabel.begin(), relabel.end(), 0);
  for (std::size_t i = 0; i + 1 < relabel.size(); ++i) {
    std::size_t j = i + (std::size_t)label_rng.below((std::uint64_t)(relabel.size() - i));
    std::swap(relabel[i], relabel[j]);
  }
  for (auto& [u, v] : edges) {
    u = relabel[(std::size_t)u];
    v = relabel[(std::size_t)v];
  }
  for (int& v : path1) v = relabel[(std::size_t)v];
  for (int& v : path2) v = relabel[(std::size_t)v];

  ProblemInstance inst;
  inst.graph = Graph::build(n, edges);
  inst.s1 = path1.front();
  inst.t1 = path1.back();
  inst.s2 = path2.front();
  inst.t2 = path2.back();
  inst.c1 = c1;
  inst.c2 = c2;
  Solution certificate{Path::from_vertices(inst.graph, path1),
                       Path::from_vertices(inst.graph, path2)};
  return {std::move(inst), std::move(certificate)};
}

}  // namespace twopaths
