#include <algorithm>

#include "doctest.h"
#include "test_util.hpp"
#include "twopaths/gadgets.hpp"
#include "twopaths/oracle.hpp"

using namespace twopaths;

namespace {

bool has_exact_path(const Graph& g, int s, int t, int k) {
  auto all = enumerate_paths(g, s, t);
  REQUIRE(!all.truncated);
  return std::any_of(all.paths.begin(), all.paths.end(),
                     [k](const Path& p) { return p.length() == k; });
}

// A yes-input for (AtMost 1, AtMost 3): direct edge plus a detour.
ProblemInstance square_yes_instance() {
  return testutil::make_instance(testutil::square_with_edge(), 0, 1, 0, 1,
                                 LengthConstraint::at_most(1), LengthConstraint::at_most(3));
}

OracleLimits composed_limits() {
  OracleLimits limits;
  limits.max_vertices = 256;
  limits.max_steps = 50'000'000;
  return limits;
}

}  // namespace

TEST_CASE("identify_compose merges terminals and preserves the OR") {
  ExactPathInstance yes{testutil::path_graph(5), 0, 4, 4};
  ExactPathInstance no{testutil::path_graph(5), 0, 4, 3};

  auto both = identify_compose({yes, yes});
  CHECK(both.graph.vertex_count() == 8);  // 10 vertices, two merged pairs
  CHECK(both.k == 4);
  CHECK(has_exact_path(both.graph, both.s, both.t, 4));

  auto neither = identify_compose({no, no});
  CHECK(!has_exact_path(neither.graph, neither.s, neither.t, 3));

  // A no-input at the same k as `yes`: the lone (0,3)-path has length 3.
  ExactPathInstance no_at4{testutil::path_graph(4), 0, 3, 4};
  auto mixed = identify_compose({no_at4, yes});
  CHECK(has_exact_path(mixed.graph, mixed.s, mixed.t, mixed.k));

  auto alone = identify_compose({yes});
  CHECK(alone.graph.vertex_count() == 5);
  CHECK(alone.graph.edge_count() == 4);
  CHECK(has_exact_path(alone.graph, alone.s, alone.t, 4));

  CHECK_THROWS_AS(identify_compose({}), std::invalid_argument);
  ExactPathInstance other_k{testutil::path_graph(3), 0, 2, 2};
  CHECK_THROWS_AS(identify_compose({yes, other_k}), std::invalid_argument);
  ExactPathInstance degenerate{testutil::path_graph(3), 1, 1, 2};
  CHECK_THROWS_AS(identify_compose({degenerate}), std::invalid_argument);
}

TEST_CASE("identify_compose collapses parallel edges from the merge") {
  // Two single-edge instances: after identification both edges join the same
  // merged endpoints, and the result must stay simple.
  ExactPathInstance e1{testutil::path_graph(2), 0, 1, 1};
  auto merged = identify_compose({e1, e1});
  CHECK(merged.graph.vertex_count() == 2);
  CHECK(merged.graph.edge_count() == 1);
}

TEST_CASE("ppt_from_exact_path carries the answer and the exact size bump") {
  Graph p5 = testutil::path_graph(5);

  auto yes = ppt_from_exact_path(p5, 0, 4, 4);
  CHECK(yes.graph.vertex_count() == 7);
  CHECK(yes.graph.edge_count() == 5);
  CHECK(yes.c1 == LengthConstraint::exactly(4));
  CHECK(yes.c2 == LengthConstraint::unbounded());
  CHECK(oracle_solve(yes).has_value());

  auto no = ppt_from_exact_path(p5, 0, 4, 3);
  CHECK(!oracle_solve(no).has_value());

  // The fresh terminal pair is the only (s2,t2)-route.
  auto sol = oracle_solve(yes);
  REQUIRE(sol.has_value());
  CHECK(sol->p2.length() == 1);
  CHECK(sol->p2.source() == yes.s2);
}

TEST_CASE("or_gadget_wiring counts and node usage") {
  auto links = or_gadget_wiring();
  CHECK(links.size() == 14);
  int longs = 0;
  std::vector<int> seen(16, 0);
  for (const auto& link : links) {
    if (link.is_long) ++longs;
    seen[(int)link.a]++;
    seen[(int)link.b]++;
    CHECK(link.a != link.b);
  }
  CHECK(longs == 6);
  for (int uses : seen) CHECK(uses > 0);
  // The composed first pair enters only through short edges.
  for (const auto& link : links) {
    if (link.a == GadgetNode::NewS1 || link.b == GadgetNode::NewT1) CHECK(!link.is_long);
    if (link.a == GadgetNode::NewS2 || link.b == GadgetNode::NewT2) CHECK(link.is_long);
  }
}

TEST_CASE("or_compose_pair parameter arithmetic") {
  auto a = square_yes_instance();
  auto b = make_no_instance(LengthConstraint::at_most(1), LengthConstraint::at_most(3));
  auto composed = or_compose_pair(a, b);
  CHECK(composed.c1 == LengthConstraint::at_most(5));
  CHECK(composed.c2 == LengthConstraint::at_most(19));

  // Closed-form check: (2, 3) -> (6, 22).
  Graph sq = testutil::square_with_edge();
  auto a2 = testutil::make_instance(sq, 0, 1, 0, 1, LengthConstraint::at_most(2),
                                    LengthConstraint::at_most(3));
  auto c2 = or_compose_pair(a2, a2);
  CHECK(c2.c1 == LengthConstraint::at_most(6));
  CHECK(c2.c2 == LengthConstraint::at_most(22));

  // Size accounting: 8 junctions + both inputs + 6 chains of length k1+4.
  int L = 1 + 4;
  CHECK(composed.graph.vertex_count() ==
        8 + a.graph.vertex_count() + b.graph.vertex_count() + 6 * (L - 1));
  CHECK(composed.graph.edge_count() ==
        8 + a.graph.edge_count() + b.graph.edge_count() + 6 * L);
}

TEST_CASE("or_compose_pair validates its inputs") {
  auto a = square_yes_instance();
  auto mismatched_k = testutil::make_instance(testutil::square_with_edge(), 0, 1, 0, 1,
                                              LengthConstraint::at_most(2),
                                              LengthConstraint::at_most(3));
  CHECK_THROWS_AS(or_compose_pair(a, mismatched_k), std::invalid_argument);

  auto wrong_shape = testutil::make_instance(testutil::square_with_edge(), 0, 1, 0, 1,
                                             LengthConstraint::exactly(1),
                                             LengthConstraint::at_most(3));
  CHECK_THROWS_AS(or_compose_pair(wrong_shape, wrong_shape), std::invalid_argument);

  auto mixed_second = testutil::make_instance(testutil::square_with_edge(), 0, 1, 0, 1,
                                              LengthConstraint::at_most(1),
                                              LengthConstraint::unbounded());
  CHECK_THROWS_AS(or_compose_pair(a, mixed_second), std::invalid_argument);
}

TEST_CASE("or_compose_pair long chains are fresh degree-2 paths") {
  auto a = square_yes_instance();
  auto b = make_no_instance(a.c1, a.c2);
  auto composed = or_compose_pair(a, b);
  int first_internal = 8 + a.graph.vertex_count() + b.graph.vertex_count();
  for (int v = first_internal; v < composed.graph.vertex_count(); ++v) {
    CHECK(composed.graph.neighbors(v).size() == 2);
  }
}

TEST_CASE("or_compose_pair realizes the OR on small inputs") {
  auto yes = square_yes_instance();
  auto no = make_no_instance(yes.c1, yes.c2);
  auto limits = composed_limits();

  CHECK(oracle_solve(or_compose_pair(yes, no), limits).has_value());
  CHECK(oracle_solve(or_compose_pair(no, yes), limits).has_value());
  CHECK(oracle_solve(or_compose_pair(yes, yes), limits).has_value());
  CHECK(!oracle_solve(or_compose_pair(no, no), limits).has_value());
}

TEST_CASE("or_compose_pair stays no when inputs are connected but unsolvable") {
  // One edge serving both terminal pairs: a first path exists (the edge
  // itself), but it starves every second path. Inside the gadget this makes
  // frame routes available while the matching return corridors dead-end, so
  // a composed yes here would mean the wiring leaks between frames.
  Graph lone = Graph::build(2, {{0, 1}});
  auto no = testutil::make_instance(lone, 0, 1, 0, 1, LengthConstraint::at_most(1),
                                    LengthConstraint::at_most(3));
  auto limits = composed_limits();
  REQUIRE(!oracle_solve(no).has_value());

  CHECK(!oracle_solve(or_compose_pair(no, no), limits).has_value());

  auto yes = square_yes_instance();
  CHECK(oracle_solve(or_compose_pair(no, yes), limits).has_value());
  CHECK(oracle_solve(or_compose_pair(yes, no), limits).has_value());
}

TEST_CASE("or_compose_pair with unbounded second constraints") {
  Graph sq = testutil::square_with_edge();
  auto yes = testutil::make_instance(sq, 0, 1, 0, 1, LengthConstraint::at_most(1),
                                     LengthConstraint::unbounded());
  auto no = make_no_instance(yes.c1, yes.c2);
  auto composed = or_compose_pair(yes, no);
  CHECK(composed.c1 == LengthConstraint::at_most(5));
  CHECK(composed.c2 == LengthConstraint::unbounded());
  auto limits = composed_limits();
  CHECK(oracle_solve(composed, limits).has_value());
  CHECK(!oracle_solve(or_compose_pair(no, no), limits).has_value());
}

TEST_CASE("or_compose_many pads, stacks levels, and reports closed forms") {
  Graph sq = testutil::square_with_edge();
  auto base = testutil::make_instance(sq, 0, 1, 0, 1, LengthConstraint::at_most(2),
                                      LengthConstraint::at_most(3));

  auto [one, r1] = or_compose_many({base});
  CHECK(r1.levels == 0);
  CHECK(r1.k1_out == 2);
  CHECK(r1.k2_out == 3);
  CHECK(one.graph == base.graph);

  auto [four, r4] = or_compose_many({base, base, base, base});
  CHECK(r4.inputs == 4);
  CHECK(r4.padded_inputs == 4);
  CHECK(r4.levels == 2);
  CHECK(r4.k1_out == 10);
  CHECK(r4.k2_out == 53);
  CHECK(four.c1 == LengthConstraint::at_most(10));
  CHECK(four.c2 == LengthConstraint::at_most(53));
  CHECK(r4.vertices_out == four.graph.vertex_count());
  CHECK(r4.edges_out == four.graph.edge_count());
  CHECK(r4.to_key_values().find("k1_out=10") != std::string::npos);
  CHECK(r4.to_key_values().find("k2_out=53") != std::string::npos);

  auto [three, r3] = or_compose_many({base, base, base});
  CHECK(r3.inputs == 3);
  CHECK(r3.padded_inputs == 4);
  CHECK(r3.levels == 2);
  CHECK(three.c1 == four.c1);

  CHECK_THROWS_AS(or_compose_many({}), std::invalid_argument);

  auto different = testutil::make_instance(sq, 0, 1, 0, 1, LengthConstraint::at_most(1),
                                           LengthConstraint::at_most(3));
  CHECK_THROWS_AS(or_compose_many({base, different}), std::invalid_argument);
}

TEST_CASE("make_no_instance is a deterministic definite no") {
  for (auto c2 : {LengthConstraint::at_most(3), LengthConstraint::unbounded()}) {
    auto inst = make_no_instance(LengthConstraint::at_most(2), c2);
    CHECK(!oracle_solve(inst).has_value());
    auto again = make_no_instance(LengthConstraint::at_most(2), c2);
    CHECK(inst.graph == again.graph);
    CHECK(inst.s1 == again.s1);
  }
}
