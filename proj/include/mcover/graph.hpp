#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcover/rational.hpp"

namespace mcover {

// Undirected edge, stored with u < v.
struct Edge {
  int u = -1;
  int v = -1;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend bool operator<(const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  }
};

// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<int> members);

  bool contains(int v) const;
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  const std::vector<int>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  static VertexSet all(int n);

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<int> members_;
};

// Immutable simple graph on vertices 0..n-1. Construction rejects self-loops
// and out-of-range endpoints and silently drops duplicate edges.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[id]; }

  // Neighbor ids of v in increasing order.
  const std::vector<int>& neighbors(int v) const;
  // Ids of edges incident to v, ordered by the neighbor at the far end.
  const std::vector<int>& incident_edges(int v) const;

  int degree(int v) const;
  int max_degree() const;
  bool has_edge(int u, int v) const;
  std::optional<int> edge_id(int u, int v) const;

  void require_vertex(int v) const;  // throws ContractError if out of range

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;       // neighbor ids, sorted
  std::vector<std::vector<int>> inc_;       // edge ids, aligned with adj_
};

// Text format: optional leading line "n" fixing the vertex count, then one
// "u v" pair per line; '#' starts a comment; blank lines are skipped.
// Self-loops and malformed lines raise ParseError with the line number.
Graph parse_graph(std::string_view text);

// Canonical text: vertex-count header, then edges sorted lexicographically.
// parse_graph(serialize_graph(g)) reproduces g exactly.
std::string serialize_graph(const Graph& g);

// Vertices outside s adjacent to at least one member of s.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

// True iff no edge of g joins two members of s.
bool is_stable(const Graph& g, const VertexSet& s);

struct LineGraphResult {
  Graph line_graph;                 // one vertex per edge of the source graph
  std::vector<VertexSet> cliques;   // per source vertex of degree >= 1: the
                                    // ids of its incident edges
};

// Line graph of h together with the family of edge-star cliques that covers
// every line-graph edge. h must have at least one vertex.
LineGraphResult line_graph(const Graph& h);

// Nonnegative exact weight per edge, aligned with Graph::edges().
class WeightMap {
 public:
  WeightMap() = default;
  WeightMap(const Graph& g, std::vector<Rational> by_edge);

  const Rational& operator[](int edge_id) const { return by_edge_[edge_id]; }
  int size() const { return static_cast<int>(by_edge_.size()); }

  static WeightMap uniform(const Graph& g, const Rational& w);

 private:
  std::vector<Rational> by_edge_;
};

// Lines "u v w" with w a nonnegative rational ("p/q" or decimal); every edge
// of g must receive exactly one weight.
WeightMap parse_weights(const Graph& g, std::string_view text);

// Per-vertex lower bounds. Unlisted vertices default to 0.
class LBounds {
 public:
  LBounds() = default;
  explicit LBounds(std::vector<int> by_vertex);
  static LBounds uniform(int n, int value);

  int operator[](int v) const { return by_vertex_[v]; }
  int size() const { return static_cast<int>(by_vertex_.size()); }
  const std::vector<int>& values() const { return by_vertex_; }

 private:
  std::vector<int> by_vertex_;
};

// Lines "v" (meaning l(v) = 1) or "v l". Vertices not mentioned get 0.
LBounds parse_lbounds(const Graph& g, std::string_view text);

// Lines "v": a plain vertex subset.
VertexSet parse_vertex_set(const Graph& g, std::string_view text);

}  // namespace mcover
