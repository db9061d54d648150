#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "mcover/cover.hpp"
#include "mcover/graph.hpp"

namespace mcover {

// Edge set with pairwise-disjoint endpoints.
struct Matching {
  std::vector<Edge> edges;
  int size() const { return static_cast<int>(edges.size()); }
};

class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int left_size, int right_size,
                 std::vector<std::pair<int, int>> edges);

  int left_size() const { return left_size_; }
  int right_size() const { return right_size_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& right_neighbors(int left) const {
    return adj_[left];
  }

 private:
  int left_size_ = 0;
  int right_size_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

struct BipartiteMatchingResult {
  std::vector<std::pair<int, int>> edges;  // matched (left, right) pairs
  // Left vertices reachable from an unmatched left vertex by paths that
  // alternate non-matching / matching edges. Every right neighbor of this set
  // is matched into it, so it is a maximum Hall violator when deficient.
  VertexSet deficiency_set;
};

// Augmenting-path search, O(V*E); deterministic scan order.
BipartiteMatchingResult bipartite_max_matching(const BipartiteGraph& b);

// Maximum-cardinality matching via blossom shrinking.
Matching max_matching(const Graph& g);

// Bipartite double cover: left and right copy per vertex, an edge uv yields
// (u, v) and (v, u) as left-right pairs.
BipartiteGraph double_cover(const Graph& g);

// Node-disjoint edges and circuits (length >= 3).
struct TwoMatchingComponent {
  bool is_circuit = false;
  std::vector<int> vertices;  // the two endpoints, or the cycle in order
};

struct TwoMatching {
  std::vector<TwoMatchingComponent> components;
};

// Every edge of the 2-matching, circuit edges once each.
std::vector<Edge> two_matching_edges(const TwoMatching& t);

// True iff components are node-disjoint valid edges/circuits of g covering
// every vertex.
bool is_perfect_two_matching(const Graph& g, const TwoMatching& t);

// Perfect 2-matching, or a stable set S with |S| > |N(S)| proving none
// exists. Decided by matching the double cover; the certificate is extracted
// from the deficiency set and re-verified before being returned.
std::variant<TwoMatching, StableSetCertificate> perfect_2_matching(
    const Graph& g);

struct MinWeightPerfectMatching {
  std::vector<Edge> edges;
  Rational total;
};

// Exact minimum-weight perfect matching on a general graph (primal-dual
// blossom over rationals). nullopt when the graph has no perfect matching.
std::optional<MinWeightPerfectMatching> min_weight_perfect_matching(
    const Graph& g, const WeightMap& w);

}  // namespace mcover
