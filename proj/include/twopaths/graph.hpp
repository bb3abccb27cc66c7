#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twopaths {

struct ParseError : std::runtime_error {
  enum class Kind {
    BadHeader,
    BadToken,
    UnexpectedEnd,
    VertexOutOfRange,
    SelfLoop,
    DuplicateEdge,
  };

  ParseError(Kind kind, int line, const std::string& message);

  Kind kind;
  int line;  // 1-based physical line of the offending input
};

struct Edge {
  int u, v;  // normalized so u < v
  int id;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Restricts traversals to one color class without materializing subgraphs.
// color == nullptr admits every edge; otherwise edge e passes iff
// color[e] == wanted, indexed by edge id.
struct EdgeFilter {
  const std::uint8_t* color = nullptr;
  std::uint8_t wanted = 0;

  bool allows(int edge_id) const {
    return color == nullptr || color[edge_id] == wanted;
  }
};

// Simple undirected graph. Vertices are 0..n-1. Freshly built graphs carry
// dense edge ids 0..m-1 in insertion order; subgraphs made by remove_edges
// keep the surviving edges' original ids, so color arrays indexed by id stay
// valid across both.
class Graph {
 public:
  Graph() = default;

  // Throws std::invalid_argument on out-of-range endpoints, self-loops, or
  // duplicate edges.
  static Graph build(int vertex_count,
                     const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return (int)edges_.size(); }
  // One past the largest edge id; the right size for id-indexed arrays.
  int edge_id_bound() const { return id_bound_; }

  const std::vector<Edge>& edges() const { return edges_; }
  // (neighbor, edge id) pairs, sorted ascending.
  const std::vector<std::pair<int, int>>& neighbors(int v) const {
    return adj_[v];
  }

  bool has_vertex(int v) const { return v >= 0 && v < n_; }
  // Edge id joining u and v, or -1 if absent.
  int edge_between(int u, int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph remove_edges(const Graph&, std::span<const int>);
  static Graph assemble(int n, int id_bound, std::vector<Edge> edges);

  int n_ = 0;
  int id_bound_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

// Simple path: distinct vertices, consecutive ones adjacent. length() counts
// edges; a single vertex is the zero-length path.
class Path {
 public:
  // Validates against g and resolves edge ids. Throws std::invalid_argument
  // on an empty sequence, unknown vertices, repeats, or non-adjacent steps.
  static Path from_vertices(const Graph& g, std::vector<int> vertices);
  static Path single(int v);

  int length() const { return (int)edge_ids_.size(); }
  int source() const { return vertices_.front(); }
  int target() const { return vertices_.back(); }
  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<int>& edge_ids() const { return edge_ids_; }

  friend bool operator==(const Path&, const Path&) = default;

 private:
  Path(std::vector<int> vertices, std::vector<int> edge_ids)
      : vertices_(std::move(vertices)), edge_ids_(std::move(edge_ids)) {}

  std::vector<int> vertices_;
  std::vector<int> edge_ids_;
};

struct DistanceMap {
  static constexpr int kUnreachable = -1;

  int source = 0;
  std::vector<int> dist;  // hop count, kUnreachable where no path exists

  bool reachable(int v) const { return dist[v] >= 0; }
  int at(int v) const { return dist[v]; }
};

// Text format: header "n m", then m lines "u v". '#' lines are comments and
// may appear anywhere; blank lines are skipped. Errors carry 1-based line
// numbers.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

DistanceMap bfs_distances(const Graph& g, int source, EdgeFilter filter = {});

// Fewest-edge path; among equals, the BFS tree built by scanning neighbors in
// ascending order, so ties break toward lower vertex ids.
std::optional<Path> shortest_path(const Graph& g, int s, int t,
                                  EdgeFilter filter = {});

// Same vertex set, listed edges dropped. Surviving edges keep their ids.
// Throws std::invalid_argument if an id does not name an edge of g.
Graph remove_edges(const Graph& g, std::span<const int> edge_ids);

}  // namespace twopaths
