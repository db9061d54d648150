#include "mcover/matching.hpp"

#include <algorithm>
#include <queue>

#include "mcover/errors.hpp"

namespace mcover {

BipartiteGraph::BipartiteGraph(int left_size, int right_size,
                               std::vector<std::pair<int, int>> edges)
    : left_size_(left_size), right_size_(right_size), edges_(std::move(edges)) {
  if (left_size_ < 0 || right_size_ < 0)
    throw ContractError("negative side size");
  adj_.resize(left_size_);
  for (auto [l, r] : edges_) {
    if (l < 0 || l >= left_size_ || r < 0 || r >= right_size_)
      throw ContractError("bipartite edge endpoint out of range");
    adj_[l].push_back(r);
  }
  for (auto& row : adj_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
}

namespace {

bool kuhn_try(const BipartiteGraph& b, int left, std::vector<char>& visited,
              std::vector<int>& match_left, std::vector<int>& match_right) {
  for (int r : b.right_neighbors(left)) {
    if (visited[r]) continue;
    visited[r] = 1;
    if (match_right[r] == -1 ||
        kuhn_try(b, match_right[r], visited, match_left, match_right)) {
      match_left[left] = r;
      match_right[r] = left;
      return true;
    }
  }
  return false;
}

}  // namespace

BipartiteMatchingResult bipartite_max_matching(const BipartiteGraph& b) {
  std::vector<int> match_left(b.left_size(), -1);
  std::vector<int> match_right(b.right_size(), -1);
  for (int l = 0; l < b.left_size(); ++l) {
    std::vector<char> visited(b.right_size(), 0);
    kuhn_try(b, l, visited, match_left, match_right);
  }

  // Alternating reachability from every unmatched left vertex.
  std::vector<char> left_seen(b.left_size(), 0);
  std::vector<char> right_seen(b.right_size(), 0);
  std::queue<int> q;
  for (int l = 0; l < b.left_size(); ++l)
    if (match_left[l] == -1) {
      left_seen[l] = 1;
      q.push(l);
    }
  while (!q.empty()) {
    int l = q.front();
    q.pop();
    for (int r : b.right_neighbors(l)) {
      if (right_seen[r]) continue;
      right_seen[r] = 1;
      int back = match_right[r];
      if (back != -1 && !left_seen[back]) {
        left_seen[back] = 1;
        q.push(back);
      }
    }
  }

  BipartiteMatchingResult result;
  for (int l = 0; l < b.left_size(); ++l)
    if (match_left[l] != -1) result.edges.push_back({l, match_left[l]});
  std::vector<int> d;
  for (int l = 0; l < b.left_size(); ++l)
    if (left_seen[l]) d.push_back(l);
  result.deficiency_set = VertexSet(std::move(d));
  return result;
}

namespace {

// Blossom-shrinking augmenting search; base[] tracks contracted cycles.
class BlossomSearch {
 public:
  explicit BlossomSearch(const Graph& g)
      : g_(g),
        n_(g.vertex_count()),
        match_(n_, -1),
        parent_(n_, -1),
        base_(n_),
        in_queue_(n_),
        in_blossom_(n_) {}

  std::vector<int> run() {
    // Cheap greedy seed keeps the number of full searches down.
    for (int v = 0; v < n_; ++v)
      if (match_[v] == -1)
        for (int to : g_.neighbors(v))
          if (match_[to] == -1) {
            match_[v] = to;
            match_[to] = v;
            break;
          }
    for (int v = 0; v < n_; ++v)
      if (match_[v] == -1) find_augmenting_path(v);
    return match_;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    int cur = a;
    for (;;) {
      cur = base_[cur];
      seen[cur] = 1;
      if (match_[cur] == -1) break;
      cur = parent_[match_[cur]];
    }
    cur = b;
    for (;;) {
      cur = base_[cur];
      if (seen[cur]) return cur;
      cur = parent_[match_[cur]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  bool find_augmenting_path(int root) {
    std::fill(parent_.begin(), parent_.end(), -1);
    std::fill(in_queue_.begin(), in_queue_.end(), 0);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    std::queue<int> q;
    q.push(root);
    in_queue_[root] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          // Odd cycle: contract it onto the common ancestor.
          int cur_base = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n_; ++i)
            if (in_blossom_[base_[i]]) {
              base_[i] = cur_base;
              if (!in_queue_[i]) {
                in_queue_[i] = 1;
                q.push(i);
              }
            }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) {
            augment_along(to);
            return true;
          }
          in_queue_[match_[to]] = 1;
          q.push(match_[to]);
        }
      }
    }
    return false;
  }

  void augment_along(int v) {
    while (v != -1) {
      int pv = parent_[v];
      int next = match_[pv];
      match_[v] = pv;
      match_[pv] = v;
      v = next;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> in_queue_;
  std::vector<char> in_blossom_;
};

}  // namespace

Matching max_matching(const Graph& g) {
  std::vector<int> mate = BlossomSearch(g).run();
  Matching result;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (mate[v] > v) result.edges.push_back({v, mate[v]});
  return result;
}

BipartiteGraph double_cover(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(2 * g.edge_count());
  for (const Edge& e : g.edges()) {
    edges.emplace_back(e.u, e.v);
    edges.emplace_back(e.v, e.u);
  }
  return BipartiteGraph(g.vertex_count(), g.vertex_count(), std::move(edges));
}

std::vector<Edge> two_matching_edges(const TwoMatching& t) {
  std::vector<Edge> out;
  for (const auto& c : t.components) {
    if (!c.is_circuit) {
      out.push_back({std::min(c.vertices[0], c.vertices[1]),
                     std::max(c.vertices[0], c.vertices[1])});
    } else {
      int len = static_cast<int>(c.vertices.size());
      for (int i = 0; i < len; ++i) {
        int a = c.vertices[i];
        int b = c.vertices[(i + 1) % len];
        out.push_back({std::min(a, b), std::max(a, b)});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_perfect_two_matching(const Graph& g, const TwoMatching& t) {
  std::vector<char> covered(g.vertex_count(), 0);
  for (const auto& c : t.components) {
    if (!c.is_circuit) {
      if (c.vertices.size() != 2) return false;
      if (!g.has_edge(c.vertices[0], c.vertices[1])) return false;
    } else {
      if (c.vertices.size() < 3) return false;
      int len = static_cast<int>(c.vertices.size());
      for (int i = 0; i < len; ++i)
        if (!g.has_edge(c.vertices[i], c.vertices[(i + 1) % len])) return false;
    }
    for (int v : c.vertices) {
      if (v < 0 || v >= g.vertex_count() || covered[v]) return false;
      covered[v] = 1;
    }
  }
  for (char c : covered)
    if (!c) return false;
  return true;
}

std::variant<TwoMatching, StableSetCertificate> perfect_2_matching(
    const Graph& g) {
  int n = g.vertex_count();
  BipartiteMatchingResult bm = bipartite_max_matching(double_cover(g));

  if (static_cast<int>(bm.edges.size()) == n) {
    // A perfect matching of the double cover is a successor permutation on
    // the original vertices; its cycles are the components.
    std::vector<int> succ(n, -1);
    for (auto [l, r] : bm.edges) succ[l] = r;
    std::vector<char> visited(n, 0);
    TwoMatching result;
    for (int v = 0; v < n; ++v) {
      if (visited[v]) continue;
      std::vector<int> cycle;
      int cur = v;
      while (!visited[cur]) {
        visited[cur] = 1;
        cycle.push_back(cur);
        cur = succ[cur];
      }
      TwoMatchingComponent comp;
      if (cycle.size() == 2) {
        comp.is_circuit = false;
        comp.vertices = cycle;
      } else {
        comp.is_circuit = true;
        comp.vertices = cycle;
      }
      result.components.push_back(std::move(comp));
    }
    return result;
  }

  // Deficient: take X from the deficiency set, Y the vertices whose right
  // copies are adjacent to it; X minus Y is stable and outnumbers its
  // neighborhood by at least the deficiency.
  std::vector<char> in_x(n, 0);
  for (int v : bm.deficiency_set) in_x[v] = 1;
  std::vector<char> in_y(n, 0);
  for (int v : bm.deficiency_set)
    for (int w : g.neighbors(v)) in_y[w] = 1;
  std::vector<int> s_members;
  for (int v = 0; v < n; ++v)
    if (in_x[v] && !in_y[v]) s_members.push_back(v);

  StableSetCertificate cert;
  cert.s = VertexSet(std::move(s_members));
  cert.n_of_s = neighborhood(g, cert.s);
  cert.k = 1;
  if (!verify_certificate(g, cert))
    throw std::logic_error(
        "certificate extraction from the double cover failed verification");
  return cert;
}

}  // namespace mcover
