#include "twopaths/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <unordered_set>

#include "text_cursor.hpp"

namespace twopaths {

ParseError::ParseError(Kind kind, int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      kind(kind),
      line(line) {}

namespace detail {

bool TextCursor::next_line(std::string_view& out) {
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    std::size_t i = 0;
    while (i < line.size() && std::isspace((unsigned char)line[i])) ++i;
    if (i == line.size() || line[i] == '#') continue;
    out = line;
    return true;
  }
  return false;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace((unsigned char)line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace((unsigned char)line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

long long parse_int_token(std::string_view token, int line, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0) {
    throw ParseError(ParseError::Kind::BadToken, line,
                     std::string("expected non-negative integer for ") + what +
                         ", got '" + std::string(token) + "'");
  }
  return value;
}

Graph parse_graph_block(TextCursor& cursor) {
  std::string_view line;
  if (!cursor.next_line(line)) {
    throw ParseError(ParseError::Kind::UnexpectedEnd, cursor.line_no + 1,
                     "missing graph header");
  }
  auto header = split_tokens(line);
  if (header.size() != 2) {
    throw ParseError(ParseError::Kind::BadHeader, cursor.line_no,
                     "graph header must be 'n m'");
  }
  long long n = parse_int_token(header[0], cursor.line_no, "vertex count");
  long long m = parse_int_token(header[1], cursor.line_no, "edge count");
  if (n > 50'000'000 || m > 200'000'000) {
    throw ParseError(ParseError::Kind::BadHeader, cursor.line_no,
                     "graph header out of supported range");
  }

  std::vector<std::pair<int, int>> edges;
  edges.reserve((std::size_t)m);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve((std::size_t)m * 2);
  for (long long i = 0; i < m; ++i) {
    if (!cursor.next_line(line)) {
      throw ParseError(ParseError::Kind::UnexpectedEnd, cursor.line_no + 1,
                       "expected " + std::to_string(m) + " edge lines, got " +
                           std::to_string(i));
    }
    auto tokens = split_tokens(line);
    if (tokens.size() != 2) {
      throw ParseError(ParseError::Kind::BadToken, cursor.line_no,
                       "edge line must be 'u v'");
    }
    long long u = parse_int_token(tokens[0], cursor.line_no, "edge endpoint");
    long long v = parse_int_token(tokens[1], cursor.line_no, "edge endpoint");
    if (u >= n || v >= n) {
      throw ParseError(ParseError::Kind::VertexOutOfRange, cursor.line_no,
                       "vertex " + std::to_string(std::max(u, v)) +
                           " out of range for n=" + std::to_string(n));
    }
    if (u == v) {
      throw ParseError(ParseError::Kind::SelfLoop, cursor.line_no,
                       "self-loop at vertex " + std::to_string(u));
    }
    int a = (int)std::min(u, v), b = (int)std::max(u, v);
    std::uint64_t key = ((std::uint64_t)a << 32) | (std::uint64_t)b;
    if (!seen.insert(key).second) {
      throw ParseError(ParseError::Kind::DuplicateEdge, cursor.line_no,
                       "duplicate edge " + std::to_string(a) + " " +
                           std::to_string(b));
    }
    edges.push_back({a, b});
  }
  return Graph::build((int)n, edges);
}

}  // namespace detail

Graph Graph::assemble(int n, int id_bound, std::vector<Edge> edges) {
  Graph g;
  g.n_ = n;
  g.id_bound_ = id_bound;
  g.edges_ = std::move(edges);
  g.adj_.assign((std::size_t)n, {});
  std::vector<int> degree((std::size_t)n, 0);
  for (const Edge& e : g.edges_) {
    ++degree[(std::size_t)e.u];
    ++degree[(std::size_t)e.v];
  }
  for (int v = 0; v < n; ++v) g.adj_[(std::size_t)v].reserve((std::size_t)degree[(std::size_t)v]);
  for (const Edge& e : g.edges_) {
    g.adj_[(std::size_t)e.u].push_back({e.v, e.id});
    g.adj_[(std::size_t)e.v].push_back({e.u, e.id});
  }
  for (auto& list : g.adj_) std::sort(list.begin(), list.end());
  return g;
}

Graph Graph::build(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  int next_id = 0;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw std::invalid_argument("edge endpoint out of range: " +
                                  std::to_string(u) + " " + std::to_string(v));
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    int a = std::min(u, v), b = std::max(u, v);
    std::uint64_t key = ((std::uint64_t)a << 32) | (std::uint64_t)b;
    if (!seen.insert(key).second) {
      throw std::invalid_argument("duplicate edge " + std::to_string(a) + " " +
                                  std::to_string(b));
    }
    normalized.push_back(Edge{a, b, next_id++});
  }
  return assemble(vertex_count, next_id, std::move(normalized));
}

int Graph::edge_between(int u, int v) const {
  if (!has_vertex(u) || !has_vertex(v)) return -1;
  const auto& list = adj_[(std::size_t)u];
  auto it = std::lower_bound(list.begin(), list.end(), std::pair<int, int>{v, -1});
  if (it != list.end() && it->first == v) return it->second;
  return -1;
}

Graph parse_graph(std::string_view text) {
  detail::TextCursor cursor{text};
  Graph g = detail::parse_graph_block(cursor);
  std::string_view extra;
  if (cursor.next_line(extra)) {
    throw ParseError(ParseError::Kind::BadToken, cursor.line_no,
                     "unexpected input after edge list");
  }
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Path Path::from_vertices(const Graph& g, std::vector<int> vertices) {
  if (vertices.empty()) throw std::invalid_argument("empty vertex sequence");
  std::unordered_set<int> seen;
  seen.reserve(vertices.size() * 2);
  for (int v : vertices) {
    if (!g.has_vertex(v)) {
      throw std::invalid_argument("path vertex out of range: " + std::to_string(v));
    }
    if (!seen.insert(v).second) {
      throw std::invalid_argument("repeated path vertex: " + std::to_string(v));
    }
  }
  std::vector<int> edge_ids;
  edge_ids.reserve(vertices.size() - 1);
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    int id = g.edge_between(vertices[i], vertices[i + 1]);
    if (id < 0) {
      throw std::invalid_argument("vertices " + std::to_string(vertices[i]) +
                                  " and " + std::to_string(vertices[i + 1]) +
                                  " are not adjacent");
    }
    edge_ids.push_back(id);
  }
  return Path(std::move(vertices), std::move(edge_ids));
}

Path Path::single(int v) {
  if (v < 0) throw std::invalid_argument("negative vertex");
  return Path({v}, {});
}

DistanceMap bfs_distances(const Graph& g, int source, EdgeFilter filter) {
  if (!g.has_vertex(source)) throw std::invalid_argument("bfs source out of range");
  DistanceMap map;
  map.source = source;
  map.dist.assign((std::size_t)g.vertex_count(), DistanceMap::kUnreachable);
  map.dist[(std::size_t)source] = 0;
  std::vector<int> queue;
  queue.reserve((std::size_t)g.vertex_count());
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    int dv = map.dist[(std::size_t)v];
    for (auto [w, eid] : g.neighbors(v)) {
      if (!filter.allows(eid) || map.dist[(std::size_t)w] >= 0) continue;
      map.dist[(std::size_t)w] = dv + 1;
      queue.push_back(w);
    }
  }
  return map;
}

std::optional<Path> shortest_path(const Graph& g, int s, int t, EdgeFilter filter) {
  if (!g.has_vertex(s) || !g.has_vertex(t)) {
    throw std::invalid_argument("path endpoint out of range");
  }
  if (s == t) return Path::single(s);
  std::vector<int> parent((std::size_t)g.vertex_count(), -1);
  std::vector<int> queue;
  queue.reserve((std::size_t)g.vertex_count());
  parent[(std::size_t)s] = s;
  queue.push_back(s);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (auto [w, eid] : g.neighbors(v)) {
      if (!filter.allows(eid) || parent[(std::size_t)w] >= 0) continue;
      parent[(std::size_t)w] = v;
      if (w == t) {
        std::vector<int> vertices;
        for (int cur = t; cur != s; cur = parent[(std::size_t)cur]) vertices.push_back(cur);
        vertices.push_back(s);
        std::reverse(vertices.begin(), vertices.end());
        return Path::from_vertices(g, std::move(vertices));
      }
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

Graph remove_edges(const Graph& g, std::span<const int> edge_ids) {
  std::vector<std::uint8_t> drop((std::size_t)g.edge_id_bound(), 0);
  for (int id : edge_ids) {
    if (id < 0 || id >= g.edge_id_bound()) {
      throw std::invalid_argument("edge id out of range: " + std::to_string(id));
    }
    drop[(std::size_t)id] = 1;
  }
  // Ids may repeat in the input; dropping is idempotent. Ids that are within
  // range but name no edge of a subgraph are rejected below.
  std::vector<std::uint8_t> present((std::size_t)g.edge_id_bound(), 0);
  for (const Edge& e : g.edges()) present[(std::size_t)e.id] = 1;
  for (int id : edge_ids) {
    if (!present[(std::size_t)id]) {
      throw std::invalid_argument("edge id not in graph: " + std::to_string(id));
    }
  }
  std::vector<Edge> kept;
  kept.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    if (!drop[(std::size_t)e.id]) kept.push_back(e);
  }
  return Graph::assemble(g.vertex_count(), g.edge_id_bound(), std::move(kept));
}

}  // namespace twopaths
