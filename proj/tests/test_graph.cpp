#include <algorithm>

#include "doctest.h"
#include "test_util.hpp"
#include "twopaths/graph.hpp"

using namespace twopaths;

TEST_CASE("parse_graph reads a path graph") {
  Graph g = parse_graph("5 4\n0 1\n1 2\n2 3\n3 4\n");
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 4);
  // Edge ids follow input order.
  CHECK(g.edges()[0] == Edge{0, 1, 0});
  CHECK(g.edges()[3] == Edge{3, 4, 3});
  REQUIRE(g.neighbors(1).size() == 2);
  CHECK(g.neighbors(1)[0] == std::pair<int, int>{0, 0});
  CHECK(g.neighbors(1)[1] == std::pair<int, int>{2, 1});
}

TEST_CASE("parse_graph accepts comments, blank lines, and missing trailing newline") {
  Graph g = parse_graph("# a triangle\n\n3 3\n0 1\n# middle comment\n1 2\n0 2");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g == parse_graph("3 3\n0 1\n1 2\n0 2\n"));
}

TEST_CASE("parse_graph rejects a duplicate edge with its line number") {
  try {
    parse_graph("3 2\n0 1\n0 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.kind == ParseError::Kind::DuplicateEdge);
    CHECK(e.line == 3);
  }
  // Reversed orientation is the same undirected edge.
  CHECK_THROWS_AS(parse_graph("3 2\n0 1\n1 0\n"), ParseError);
}

TEST_CASE("parse_graph rejects a self-loop with its line number") {
  try {
    parse_graph("3 1\n2 2\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.kind == ParseError::Kind::SelfLoop);
    CHECK(e.line == 2);
  }
}

TEST_CASE("parse_graph rejects malformed input") {
  try {
    parse_graph("3 1\n0 7\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.kind == ParseError::Kind::VertexOutOfRange);
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_graph("3\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), ParseError);       // missing edge line
  CHECK_THROWS_AS(parse_graph("2 1\n0 x\n"), ParseError);       // bad token
  CHECK_THROWS_AS(parse_graph("2 1\n0 1\nextra\n"), ParseError);  // trailing junk
  CHECK_THROWS_AS(parse_graph(""), ParseError);
}

TEST_CASE("serialize then parse is the identity") {
  Graph g = testutil::random_graph(9, 14, 123);
  CHECK(parse_graph(serialize_graph(g)) == g);
  Graph empty = Graph::build(3, {});
  CHECK(parse_graph(serialize_graph(empty)) == empty);
}

TEST_CASE("bfs_distances on canonical shapes") {
  Graph p5 = testutil::path_graph(5);
  auto d = bfs_distances(p5, 0);
  CHECK(d.dist == std::vector<int>{0, 1, 2, 3, 4});

  Graph c4 = testutil::cycle_graph(4);
  CHECK(bfs_distances(c4, 0).dist == std::vector<int>{0, 1, 2, 1});

  Graph with_isolated = Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  auto d2 = bfs_distances(with_isolated, 0);
  CHECK(!d2.reachable(5));
  CHECK(d2.dist[5] == DistanceMap::kUnreachable);
  CHECK(d2.reachable(4));
}

TEST_CASE("bfs steps by at most one across every edge") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    Graph g = testutil::random_graph(12, 18, 900 + seed);
    auto d = bfs_distances(g, (int)(seed % 12));
    for (const Edge& e : g.edges()) {
      if (d.reachable(e.u) != d.reachable(e.v)) FAIL("one endpoint unreachable");
      if (d.reachable(e.u)) CHECK(std::abs(d.at(e.u) - d.at(e.v)) <= 1);
    }
  }
}

TEST_CASE("shortest_path takes the lowest-id tie-break") {
  Graph c4 = testutil::cycle_graph(4);
  auto p = shortest_path(c4, 0, 2);
  REQUIRE(p.has_value());
  CHECK(p->vertices() == std::vector<int>{0, 1, 2});

  auto unique = shortest_path(testutil::path_graph(5), 0, 4);
  REQUIRE(unique.has_value());
  CHECK(unique->vertices() == std::vector<int>{0, 1, 2, 3, 4});

  Graph split = Graph::build(4, {{0, 1}, {2, 3}});
  CHECK(!shortest_path(split, 0, 3).has_value());

  auto self = shortest_path(c4, 2, 2);
  REQUIRE(self.has_value());
  CHECK(self->length() == 0);
  CHECK(self->source() == 2);
}

TEST_CASE("shortest_path length matches bfs distance") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = testutil::random_graph(11, 16, 40 + seed);
    auto d = bfs_distances(g, 0);
    for (int t = 0; t < g.vertex_count(); ++t) {
      auto p = shortest_path(g, 0, t);
      if (d.reachable(t)) {
        REQUIRE(p.has_value());
        CHECK(p->length() == d.at(t));
      } else {
        CHECK(!p.has_value());
      }
    }
  }
}

TEST_CASE("remove_edges keeps surviving edge ids") {
  Graph k4 = testutil::complete_graph(4);
  int id01 = k4.edge_between(0, 1);
  REQUIRE(id01 >= 0);
  Graph smaller = remove_edges(k4, std::vector<int>{id01});
  CHECK(smaller.vertex_count() == 4);
  CHECK(smaller.edge_count() == 5);
  CHECK(smaller.edge_between(0, 1) == -1);
  CHECK(smaller.edge_between(2, 3) == k4.edge_between(2, 3));
  CHECK(smaller.edge_id_bound() == k4.edge_id_bound());

  CHECK(remove_edges(k4, std::vector<int>{}) == k4);

  std::vector<int> all;
  for (const Edge& e : k4.edges()) all.push_back(e.id);
  Graph bare = remove_edges(k4, all);
  CHECK(bare.edge_count() == 0);
  auto d = bfs_distances(bare, 0);
  for (int v = 1; v < 4; ++v) CHECK(!d.reachable(v));

  CHECK_THROWS_AS(remove_edges(k4, std::vector<int>{99}), std::invalid_argument);
  CHECK_THROWS_AS(remove_edges(smaller, std::vector<int>{id01}), std::invalid_argument);
}

TEST_CASE("Path::from_vertices validates structure") {
  Graph p5 = testutil::path_graph(5);
  Path p = Path::from_vertices(p5, {1, 2, 3});
  CHECK(p.length() == 2);
  CHECK(p.source() == 1);
  CHECK(p.target() == 3);
  CHECK(p.edge_ids() == std::vector<int>{1, 2});

  Path single = Path::single(4);
  CHECK(single.length() == 0);
  CHECK(single.source() == single.target());

  CHECK_THROWS_AS(Path::from_vertices(p5, {}), std::invalid_argument);
  CHECK_THROWS_AS(Path::from_vertices(p5, {0, 2}), std::invalid_argument);     // not adjacent
  CHECK_THROWS_AS(Path::from_vertices(p5, {0, 1, 0}), std::invalid_argument);  // repeat
  CHECK_THROWS_AS(Path::from_vertices(p5, {4, 5}), std::invalid_argument);     // out of range
}

TEST_CASE("Graph::build normalizes and validates") {
  CHECK_THROWS_AS(Graph::build(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::build(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::build(2, {{0, 2}}), std::invalid_argument);
  Graph g = Graph::build(3, {{2, 0}});
  CHECK(g.edges()[0].u == 0);
  CHECK(g.edges()[0].v == 2);
}
