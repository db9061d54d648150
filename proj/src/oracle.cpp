#include "mcover/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "mcover/errors.hpp"

namespace mcover {

namespace {

void require_vertex_limit(const Graph& g, const OracleLimits& limits) {
  if (g.vertex_count() > limits.max_vertices)
    throw SizeLimitError("refusing exhaustive scan on " +
                         std::to_string(g.vertex_count()) + " vertices (limit " +
                         std::to_string(limits.max_vertices) + ")");
}

void require_edge_limit(const Graph& g, const OracleLimits& limits) {
  if (g.edge_count() > limits.max_edges)
    throw SizeLimitError("refusing exhaustive scan on " +
                         std::to_string(g.edge_count()) + " edges (limit " +
                         std::to_string(limits.max_edges) + ")");
}

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> mask(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    mask[e.u] |= std::uint32_t(1) << e.v;
    mask[e.v] |= std::uint32_t(1) << e.u;
  }
  return mask;
}

std::vector<int> mask_to_vertices(std::uint32_t mask) {
  std::vector<int> out;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1) out.push_back(v);
  return out;
}

// Visits every nonempty stable subset of `candidates` exactly once.
template <typename Fn>
void enumerate_stable_sets(const std::vector<int>& candidates,
                           const std::vector<std::uint32_t>& adj, Fn&& visit) {
  struct Rec {
    const std::vector<int>& cand;
    const std::vector<std::uint32_t>& adj;
    Fn& visit;
    void run(size_t i, std::uint32_t set_mask, std::uint32_t nbr_mask) {
      for (size_t j = i; j < cand.size(); ++j) {
        std::uint32_t bit = std::uint32_t(1) << cand[j];
        if (nbr_mask & bit) continue;  // adjacent to the current set
        visit(set_mask | bit);
        run(j + 1, set_mask | bit, nbr_mask | adj[cand[j]]);
      }
    }
  };
  Rec rec{candidates, adj, visit};
  rec.run(0, 0, 0);
}

}  // namespace

DeficitReport brute_max_deficit(const Graph& g, int k, const VertexSet& u,
                                const OracleLimits& limits) {
  require_vertex_limit(g, limits);
  if (k < 1) throw ContractError("k must be positive");
  for (int v : u) g.require_vertex(v);

  auto adj = adjacency_masks(g);
  DeficitReport report;
  bool have_any = false;
  enumerate_stable_sets(u.members(), adj, [&](std::uint32_t set_mask) {
    std::uint32_t nbr = 0;
    for (std::uint32_t m = set_mask; m;) {
      int v = std::countr_zero(m);
      m &= m - 1;
      nbr |= adj[v];
    }
    nbr &= ~set_mask;
    int s_size = std::popcount(set_mask);
    int n_size = std::popcount(nbr);
    int deficit = s_size - k * n_size;
    if (!have_any || deficit > report.max_deficit) {
      report.max_deficit = deficit;
      report.argmax_set = VertexSet(mask_to_vertices(set_mask));
    }
    have_any = true;
    if (n_size > 0)
      report.ratio_max = std::max(report.ratio_max,
                                  (s_size + n_size - 1) / n_size);
  });
  if (!have_any) {
    report.max_deficit = 0;  // empty target set: nothing to cover
    report.argmax_set = VertexSet();
  }
  return report;
}

int brute_min_k(const Graph& g, const OracleLimits& limits) {
  require_vertex_limit(g, limits);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) throw IsolatedVertexError(v);
  if (g.vertex_count() == 0) return 1;

  DeficitReport report = brute_max_deficit(g, 1, VertexSet::all(g.vertex_count()),
                                           limits);
  if (report.ratio_max >= 2) return report.ratio_max;
  return brute_has_perfect_matching(g, limits) ? 1 : 2;
}

namespace {

// Backtracking matching search on the first uncovered vertex.
int matching_number_rec(const Graph& g, std::vector<char>& used, int from) {
  int n = g.vertex_count();
  int v = from;
  while (v < n && used[v]) ++v;
  if (v == n) return 0;
  // Option 1: leave v uncovered.
  int best = matching_number_rec(g, used, v + 1);
  used[v] = 1;
  for (int w : g.neighbors(v)) {
    if (used[w]) continue;
    used[w] = 1;
    best = std::max(best, 1 + matching_number_rec(g, used, v + 1));
    used[w] = 0;
  }
  used[v] = 0;
  return best;
}

bool perfect_matching_rec(const Graph& g, std::vector<char>& used, int from) {
  int n = g.vertex_count();
  int v = from;
  while (v < n && used[v]) ++v;
  if (v == n) return true;
  used[v] = 1;
  for (int w : g.neighbors(v)) {
    if (used[w]) continue;
    used[w] = 1;
    if (perfect_matching_rec(g, used, v + 1)) {
      used[w] = 0;
      used[v] = 0;
      return true;
    }
    used[w] = 0;
  }
  used[v] = 0;
  return false;
}

}  // namespace

int brute_matching_number(const Graph& g, const OracleLimits& limits) {
  require_vertex_limit(g, limits);
  std::vector<char> used(g.vertex_count(), 0);
  return matching_number_rec(g, used, 0);
}

bool brute_has_perfect_matching(const Graph& g, const OracleLimits& limits) {
  require_vertex_limit(g, limits);
  if (g.vertex_count() % 2 != 0) return false;
  std::vector<char> used(g.vertex_count(), 0);
  return perfect_matching_rec(g, used, 0);
}

namespace {

bool min_weight_pm_rec(const Graph& g, const WeightMap& w,
                       std::vector<char>& used, int from, Rational acc,
                       std::optional<Rational>& best) {
  int n = g.vertex_count();
  int v = from;
  while (v < n && used[v]) ++v;
  if (v == n) {
    if (!best || acc < *best) best = acc;
    return true;
  }
  bool any = false;
  used[v] = 1;
  for (int w_id : g.incident_edges(v)) {
    const Edge& e = g.edge(w_id);
    int other = e.u == v ? e.v : e.u;
    if (used[other]) continue;
    used[other] = 1;
    any |= min_weight_pm_rec(g, w, used, v + 1, acc + w[w_id], best);
    used[other] = 0;
  }
  used[v] = 0;
  return any;
}

}  // namespace

std::optional<Rational> brute_min_weight_perfect_matching(
    const Graph& g, const WeightMap& w, const OracleLimits& limits) {
  require_vertex_limit(g, limits);
  if (g.vertex_count() % 2 != 0) return std::nullopt;
  std::vector<char> used(g.vertex_count(), 0);
  std::optional<Rational> best;
  min_weight_pm_rec(g, w, used, 0, Rational(0), best);
  return best;
}

namespace {

bool color_edges_rec(const std::vector<Edge>& edges, size_t i, int k,
                     std::vector<std::uint32_t>& used_colors, int colors_used) {
  if (i == edges.size()) return true;
  const Edge& e = edges[i];
  std::uint32_t blocked = used_colors[e.u] | used_colors[e.v];
  // Allowing at most one fresh color per step removes color-permutation
  // symmetry without losing any partition.
  int cap = std::min(k, colors_used + 1);
  for (int c = 0; c < cap; ++c) {
    std::uint32_t bit = std::uint32_t(1) << c;
    if (blocked & bit) continue;
    used_colors[e.u] |= bit;
    used_colors[e.v] |= bit;
    if (color_edges_rec(edges, i + 1, k, used_colors,
                        std::max(colors_used, c + 1)))
      return true;
    used_colors[e.u] &= ~bit;
    used_colors[e.v] &= ~bit;
  }
  return false;
}

}  // namespace

bool brute_k_edge_colorable(const Graph& g, const std::vector<Edge>& edges,
                            int k) {
  if (k < 0) throw ContractError("negative k");
  std::vector<int> deg(g.vertex_count(), 0);
  for (const Edge& e : edges) {
    if (!g.has_edge(e.u, e.v)) throw ContractError("edge not in graph");
    ++deg[e.u];
    ++deg[e.v];
  }
  int delta = 0;
  for (int d : deg) delta = std::max(delta, d);
  if (delta > k) return false;
  if (delta < k) return true;  // one more color than the max degree always fits
  std::vector<std::uint32_t> used_colors(g.vertex_count(), 0);
  return color_edges_rec(edges, 0, k, used_colors, 0);
}

std::optional<Rational> brute_min_weight_cover(const Graph& g, int k,
                                               const WeightMap& w,
                                               const OracleLimits& limits) {
  require_edge_limit(g, limits);
  if (k < 1) throw ContractError("k must be positive");
  int m = g.edge_count();
  int n = g.vertex_count();
  std::optional<Rational> best;
  for (std::uint32_t subset = 0; subset < (std::uint32_t(1) << m); ++subset) {
    std::vector<int> deg(n, 0);
    bool degree_ok = true;
    for (std::uint32_t s = subset; s && degree_ok;) {
      int id = std::countr_zero(s);
      s &= s - 1;
      const Edge& e = g.edge(id);
      if (++deg[e.u] > k || ++deg[e.v] > k) degree_ok = false;
    }
    if (!degree_ok) continue;
    bool covers = true;
    for (int v = 0; v < n && covers; ++v)
      if (deg[v] == 0) covers = false;
    if (!covers) continue;

    Rational total(0);
    std::vector<Edge> picked;
    for (std::uint32_t s = subset; s;) {
      int id = std::countr_zero(s);
      s &= s - 1;
      picked.push_back(g.edge(id));
      total += w[id];
    }
    if (best && total >= *best) continue;
    if (!brute_k_edge_colorable(g, picked, k)) continue;
    best = total;
  }
  return best;
}

LkReport brute_lk_deficit(const Graph& g, const LBounds& l, int k,
                          const OracleLimits& limits) {
  require_vertex_limit(g, limits);
  if (k < 1) throw ContractError("k must be positive");
  if (l.size() != g.vertex_count())
    throw ContractError("bounds do not match the vertex count");
  int n = g.vertex_count();
  auto adj = adjacency_masks(g);
  LkReport report;
  bool have_any = false;
  for (std::uint32_t x = 0; x < (std::uint32_t(1) << n); ++x) {
    int value = -k * std::popcount(x);
    for (int v = 0; v < n; ++v) {
      if (x & (std::uint32_t(1) << v)) continue;
      int remaining_degree = std::popcount(adj[v] & ~x);
      value += std::max(l[v] - remaining_degree, 0);
    }
    if (!have_any || value > report.max_violation) {
      report.max_violation = value;
      report.argmax_set = VertexSet(mask_to_vertices(x));
      have_any = true;
    }
  }
  return report;
}

}  // namespace mcover
