#pragma once

#include <optional>

#include "mcover/cover.hpp"
#include "mcover/graph.hpp"

namespace mcover {

// Hard caps for the exhaustive reference routines below; anything larger is
// refused with SizeLimitError rather than left to run forever.
struct OracleLimits {
  int max_vertices = 20;
  int max_edges = 20;
};

struct DeficitReport {
  int max_deficit = 0;        // max over nonempty stable S in u of |S|-k|N(S)|
  VertexSet argmax_set;       // first maximizer in enumeration order
  int ratio_max = 0;          // max ceil(|S|/|N(S)|) over sets with N(S)!=empty
};

// Enumerates every nonempty stable subset of u. A positive max_deficit means
// no k matchings cover u; zero or below means they can.
DeficitReport brute_max_deficit(const Graph& g, int k, const VertexSet& u,
                                const OracleLimits& limits = {});

// Smallest k whose matchings cover all vertices, by stable-set enumeration
// plus a perfect-matching search for the 1-versus-2 decision. Throws
// IsolatedVertexError when some vertex cannot be covered at all.
int brute_min_k(const Graph& g, const OracleLimits& limits = {});

// Minimum total weight of a subgraph that splits into k matchings covering
// every vertex; edge-subset scan with an exact colorability check.
// nullopt = no such subgraph exists.
std::optional<Rational> brute_min_weight_cover(const Graph& g, int k,
                                               const WeightMap& w,
                                               const OracleLimits& limits = {});

struct LkReport {
  int max_violation = 0;  // max over X of sum_{x not in X} max(l(x)-d_{G-X}(x),0) - k|X|
  VertexSet argmax_set;
};

// Exhausts all vertex subsets X; a positive max_violation means no subgraph
// with degrees between l(v) and k exists.
LkReport brute_lk_deficit(const Graph& g, const LBounds& l, int k,
                          const OracleLimits& limits = {});

// Matching references used to cross-check the solvers.
int brute_matching_number(const Graph& g, const OracleLimits& limits = {});
bool brute_has_perfect_matching(const Graph& g, const OracleLimits& limits = {});
std::optional<Rational> brute_min_weight_perfect_matching(
    const Graph& g, const WeightMap& w, const OracleLimits& limits = {});

// True iff the listed edges can be partitioned into k matchings; backtracking
// over edges with the first-use color order fixed.
bool brute_k_edge_colorable(const Graph& g, const std::vector<Edge>& edges,
                            int k);

}  // namespace mcover
