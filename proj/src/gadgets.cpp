#include "twopaths/gadgets.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace twopaths {

ExactPathInstance identify_compose(const std::vector<ExactPathInstance>& instances) {
  if (instances.empty()) throw std::invalid_argument("no instances to compose");
  const int k = instances.front().k;
  for (const auto& inst : instances) {
    if (inst.k != k) throw std::invalid_argument("mismatched path lengths");
    if (!inst.graph.has_vertex(inst.s) || !inst.graph.has_vertex(inst.t)) {
      throw std::invalid_argument("terminal out of range");
    }
    if (inst.s == inst.t) {
      throw std::invalid_argument("identification requires distinct terminals");
    }
  }
  int next_vertex = 2;  // 0 = merged source, 1 = merged sink
  std::set<std::pair<int, int>> edge_set;
  for (const auto& inst : instances) {
    std::vector<int> map((std::size_t)inst.graph.vertex_count());
    for (int v = 0; v < inst.graph.vertex_count(); ++v) {
      map[(std::size_t)v] = v == inst.s ? 0 : v == inst.t ? 1 : next_vertex++;
    }
    for (const Edge& e : inst.graph.edges()) {
      int u = map[(std::size_t)e.u], v = map[(std::size_t)e.v];
      edge_set.insert({std::min(u, v), std::max(u, v)});
    }
  }
  std::vector<std::pair<int, int>> edges(edge_set.begin(), edge_set.end());
  return ExactPathInstance{Graph::build(next_vertex, edges), 0, 1, k};
}

ProblemInstance ppt_from_exact_path(const Graph& g, int s, int t, int k) {
  if (!g.has_vertex(s) || !g.has_vertex(t)) {
    throw std::invalid_argument("terminal out of range");
  }
  if (k < 0) throw std::invalid_argument("negative path length");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges().size() + 1);
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  const int s2 = g.vertex_count();
  const int t2 = g.vertex_count() + 1;
  edges.push_back({s2, t2});
  ProblemInstance inst;
  inst.graph = Graph::build(g.vertex_count() + 2, edges);
  inst.s1 = s;
  inst.t1 = t;
  inst.s2 = s2;
  inst.t2 = t2;
  inst.c1 = LengthConstraint::exactly(k);
  inst.c2 = LengthConstraint::unbounded();
  return inst;
}

std::span<const GadgetLink> or_gadget_wiring() {
  using N = GadgetNode;
  // Two edge-disjoint (NewS1,NewT1)-frames: the "dotted" one passes through
  // input b's first-path terminals, the "dashed" one through a's. The
  // (NewS2,NewT2)-routes cross over: certifying a rides the dotted bridge
  // U1-U2, certifying b rides the dashed bridge V1-V2, so each pairs with
  // the frame it does NOT share edges with.
  static constexpr GadgetLink kWiring[] = {
      {N::NewS1, N::U1, false},   // dotted frame
      {N::U1, N::U2, false},
      {N::U2, N::BS1, false},
      {N::BT1, N::NewT1, false},
      {N::NewS1, N::V1, false},   // dashed frame
      {N::V1, N::V2, false},
      {N::V2, N::AS1, false},
      {N::AT1, N::NewT1, false},
      {N::NewS2, N::U1, true},    // second-path route certifying a
      {N::U2, N::AS2, true},
      {N::AT2, N::NewT2, true},
      {N::NewS2, N::BS2, true},   // second-path route certifying b
      {N::BT2, N::V1, true},
      {N::V2, N::NewT2, true},
  };
  return kWiring;
}

ProblemInstance or_compose_pair(const ProblemInstance& a, const ProblemInstance& b) {
  if (a.c1.kind != BoundKind::AtMost || a.c1 != b.c1) {
    throw std::invalid_argument("first constraints must be matching AtMost bounds");
  }
  bool unbounded = a.c2.kind == BoundKind::Unbounded;
  if ((a.c2.kind != BoundKind::AtMost && !unbounded) || a.c2 != b.c2) {
    throw std::invalid_argument("second constraints must be matching AtMost or Unbounded");
  }
  const int k1 = a.c1.k;
  const int chain_len = k1 + 4;
  const int na = a.graph.vertex_count();
  const int nb = b.graph.vertex_count();
  const int offset_a = 8;
  const int offset_b = 8 + na;
  int next_fresh = 8 + na + nb;

  auto node_vertex = [&](GadgetNode node) -> int {
    switch (node) {
      case GadgetNode::NewS1: return 0;
      case GadgetNode::NewT1: return 1;
      case GadgetNode::NewS2: return 2;
      case GadgetNode::NewT2: return 3;
      case GadgetNode::U1: return 4;
      case GadgetNode::U2: return 5;
      case GadgetNode::V1: return 6;
      case GadgetNode::V2: return 7;
      case GadgetNode::AS1: return offset_a + a.s1;
      case GadgetNode::AT1: return offset_a + a.t1;
      case GadgetNode::AS2: return offset_a + a.s2;
      case GadgetNode::AT2: return offset_a + a.t2;
      case GadgetNode::BS1: return offset_b + b.s1;
      case GadgetNode::BT1: return offset_b + b.t1;
      case GadgetNode::BS2: return offset_b + b.s2;
      case GadgetNode::BT2: return offset_b + b.t2;
    }
    throw std::logic_error("unknown gadget node");
  };

  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : a.graph.edges()) edges.push_back({offset_a + e.u, offset_a + e.v});
  for (const Edge& e : b.graph.edges()) edges.push_back({offset_b + e.u, offset_b + e.v});
  for (const GadgetLink& link : or_gadget_wiring()) {
    int from = node_vertex(link.a);
    int to = node_vertex(link.b);
    if (!link.is_long) {
      edges.push_back({from, to});
      continue;
    }
    int prev = from;
    for (int step = 1; step < chain_len; ++step) {
      edges.push_back({prev, next_fresh});
      prev = next_fresh++;
    }
    edges.push_back({prev, to});
  }

  ProblemInstance out;
  out.graph = Graph::build(next_fresh, edges);
  out.s1 = 0;
  out.t1 = 1;
  out.s2 = 2;
  out.t2 = 3;
  out.c1 = LengthConstraint::at_most(k1 + 4);
  out.c2 = unbounded ? LengthConstraint::unbounded()
                     : LengthConstraint::at_most(a.c2.k + 3 * chain_len + 1);
  return out;
}

std::string CompositionReport::to_key_values() const {
  std::ostringstream out;
  out << "k1_in=" << k1_in << '\n';
  out << "k2_in=" << k2_in << '\n';
  out << "second_unbounded=" << (second_unbounded ? 1 : 0) << '\n';
  out << "inputs=" << inputs << '\n';
  out << "padded_inputs=" << padded_inputs << '\n';
  out << "levels=" << levels << '\n';
  out << "k1_out=" << k1_out << '\n';
  out << "k2_out=" << k2_out << '\n';
  out << "vertices=" << vertices_out << '\n';
  out << "edges=" << edges_out << '\n';
  return out.str();
}

std::pair<ProblemInstance, CompositionReport> or_compose_many(
    const std::vector<ProblemInstance>& instances) {
  if (instances.empty()) throw std::invalid_argument("no instances to compose");
  const LengthConstraint c1 = instances.front().c1;
  const LengthConstraint c2 = instances.front().c2;
  if (c1.kind != BoundKind::AtMost ||
      (c2.kind != BoundKind::AtMost && c2.kind != BoundKind::Unbounded)) {
    throw std::invalid_argument("composable constraints are (AtMost, AtMost) or (AtMost, Unbounded)");
  }
  for (const auto& inst : instances) {
    if (inst.c1 != c1 || inst.c2 != c2) {
      throw std::invalid_argument("instances must share their constraint pair");
    }
  }

  CompositionReport report;
  report.k1_in = c1.k;
  report.k2_in = c2.k;
  report.second_unbounded = c2.kind == BoundKind::Unbounded;
  report.inputs = (int)instances.size();

  std::vector<ProblemInstance> layer = instances;
  while ((layer.size() & (layer.size() - 1)) != 0) {
    layer.push_back(make_no_instance(c1, c2));
  }
  report.padded_inputs = (int)layer.size();

  int levels = 0;
  while (layer.size() > 1) {
    std::vector<ProblemInstance> next;
    next.reserve(layer.size() / 2);
    for (std::size_t i = 0; i + 1 < layer.size(); i += 2) {
      next.push_back(or_compose_pair(layer[i], layer[i + 1]));
    }
    layer = std::move(next);
    ++levels;
  }

  report.levels = levels;
  const ProblemInstance& out = layer.front();
  report.k1_out = out.c1.k;
  report.k2_out = out.c2.kind == BoundKind::AtMost ? out.c2.k : 0;
  report.vertices_out = out.graph.vertex_count();
  report.edges_out = out.graph.edge_count();
  return {out, report};
}

ProblemInstance make_no_instance(LengthConstraint c1, LengthConstraint c2) {
  // The first terminal pair sits in separate components: no first path
  // exists of any length, so the instance is a no under every bound shape.
  ProblemInstance inst;
  inst.graph = Graph::build(4, {{2, 3}});
  inst.s1 = 0;
  inst.t1 = 1;
  inst.s2 = 2;
  inst.t2 = 3;
  inst.c1 = c1;
  inst.c2 = c2;
  return inst;
}

}  // namespace twopaths
