#include <algorithm>
#include <deque>
#include <optional>
#include <vector>

#include "mcover/errors.hpp"
#include "mcover/matching.hpp"

namespace mcover {

namespace {

// Primal-dual blossom search for a maximum-weight perfect matching, exact
// over rationals. Classic O(n^3) layout: a (2n)^2 adjacency matrix whose rows
// and columns cover both original vertices and contracted blossoms, surface
// membership in st_, and dual values in lab_. Vertices are 1-indexed here;
// 0 serves as "none". Absent cells carry weight index 0; present edges index
// into weights_, which keeps the matrix cells small.
class WeightedBlossom {
 public:
  explicit WeightedBlossom(int n) : n_(n), cap_(2 * n + 2) {
    cells_.assign(static_cast<size_t>(cap_) * cap_, Cell{});
    for (int u = 0; u < cap_; ++u)
      for (int v = 0; v < cap_; ++v) cell(u, v) = Cell{u, v, 0};
    weights_.assign(1, Rational(0));
    lab_.assign(cap_, Rational(0));
    match_.assign(cap_, 0);
    slack_.assign(cap_, 0);
    st_.assign(cap_, 0);
    pa_.assign(cap_, 0);
    s_.assign(cap_, -1);
    vis_.assign(cap_, 0);
    flower_.assign(cap_, {});
    flower_from_.assign(cap_, std::vector<int>(n_ + 1, 0));
  }

  void add_edge(int u, int v, const Rational& w) {
    weights_.push_back(w);
    int idx = static_cast<int>(weights_.size()) - 1;
    cell(u, v) = Cell{u, v, idx};
    cell(v, u) = Cell{v, u, idx};
  }

  // Matched pairs of a maximum-weight perfect matching, or nullopt when no
  // perfect matching exists.
  std::optional<std::vector<std::pair<int, int>>> solve() {
    n_x_ = n_;
    Rational w_max(0);
    for (int u = 1; u <= n_; ++u) {
      st_[u] = u;
      flower_from_[u][u] = u;
      for (int v = 1; v <= n_; ++v)
        if (cell(u, v).w && weights_[cell(u, v).w] > w_max)
          w_max = weights_[cell(u, v).w];
    }
    for (int u = 1; u <= n_; ++u) lab_[u] = w_max;

    int free_vertices = n_;
    while (free_vertices > 0) {
      if (!phase()) return std::nullopt;
      free_vertices -= 2;
    }
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n_; ++u)
      if (match_[u] > u) out.emplace_back(u, match_[u]);
    return out;
  }

 private:
  struct Cell {
    int u = 0;
    int v = 0;
    int w = 0;  // index into weights_, 0 = no edge
  };

  Cell& cell(int u, int v) { return cells_[static_cast<size_t>(u) * cap_ + v]; }

  Rational e_delta(const Cell& c) const {
    return lab_[c.u] + lab_[c.v] - weights_[c.w] * 2;
  }

  void update_slack(int u, int x) {
    if (!slack_[x] || e_delta(cell(u, x)) < e_delta(cell(slack_[x], x)))
      slack_[x] = u;
  }

  void set_slack(int x) {
    slack_[x] = 0;
    for (int u = 1; u <= n_; ++u)
      if (cell(u, x).w && st_[u] != x && s_[st_[u]] == 0) update_slack(u, x);
  }

  void q_push(int x) {
    if (x <= n_) {
      q_.push_back(x);
    } else {
      for (int m : flower_[x]) q_push(m);
    }
  }

  void set_st(int x, int b) {
    st_[x] = b;
    if (x > n_)
      for (int m : flower_[x]) set_st(m, b);
  }

  // Position of member xr inside flower_[b], reorienting the cycle so that
  // the stretch from the base to xr has even length.
  int get_pr(int b, int xr) {
    auto it = std::find(flower_[b].begin(), flower_[b].end(), xr);
    int pr = static_cast<int>(it - flower_[b].begin());
    if (pr % 2 == 1) {
      std::reverse(flower_[b].begin() + 1, flower_[b].end());
      return static_cast<int>(flower_[b].size()) - pr;
    }
    return pr;
  }

  void set_match(int u, int v) {
    match_[u] = cell(u, v).v;
    if (u > n_) {
      Cell e = cell(u, v);
      int xr = flower_from_[u][e.u];
      int pr = get_pr(u, xr);
      for (int i = 0; i < pr; ++i)
        set_match(flower_[u][i], flower_[u][i ^ 1]);
      set_match(xr, v);
      std::rotate(flower_[u].begin(), flower_[u].begin() + pr,
                  flower_[u].end());
    }
  }

  void augment(int u, int v) {
    for (;;) {
      int xnv = st_[match_[u]];
      set_match(u, v);
      if (!xnv) return;
      set_match(xnv, st_[pa_[xnv]]);
      u = st_[pa_[xnv]];
      v = xnv;
    }
  }

  int get_lca(int u, int v) {
    for (++lca_stamp_; u || v; std::swap(u, v)) {
      if (u == 0) continue;
      if (vis_[u] == lca_stamp_) return u;
      vis_[u] = lca_stamp_;
      u = st_[match_[u]];
      if (u) u = st_[pa_[u]];
    }
    return 0;
  }

  void add_blossom(int u, int anchor, int v) {
    int b = n_ + 1;
    while (b <= n_x_ && st_[b]) ++b;
    if (b > n_x_) ++n_x_;
    lab_[b] = 0;
    s_[b] = 0;
    match_[b] = match_[anchor];
    flower_[b].clear();
    flower_[b].push_back(anchor);
    for (int x = u, y; x != anchor; x = st_[pa_[y]]) {
      flower_[b].push_back(x);
      y = st_[match_[x]];
      flower_[b].push_back(y);
      q_push(y);
    }
    std::reverse(flower_[b].begin() + 1, flower_[b].end());
    for (int x = v, y; x != anchor; x = st_[pa_[y]]) {
      flower_[b].push_back(x);
      y = st_[match_[x]];
      flower_[b].push_back(y);
      q_push(y);
    }
    set_st(b, b);
    for (int x = 1; x <= n_x_; ++x) {
      cell(b, x).w = 0;
      cell(x, b).w = 0;
    }
    for (int x = 1; x <= n_; ++x) flower_from_[b][x] = 0;
    for (int xs : flower_[b]) {
      for (int x = 1; x <= n_x_; ++x)
        if (cell(xs, x).w &&
            (cell(b, x).w == 0 || e_delta(cell(xs, x)) < e_delta(cell(b, x)))) {
          cell(b, x) = cell(xs, x);
          cell(x, b) = cell(x, xs);
        }
      for (int x = 1; x <= n_; ++x)
        if (flower_from_[xs][x]) flower_from_[b][x] = xs;
    }
    set_slack(b);
  }

  void expand_blossom(int b) {
    for (int m : flower_[b]) set_st(m, m);
    int xr = flower_from_[b][cell(b, pa_[b]).u];
    int pr = get_pr(b, xr);
    for (int i = 0; i < pr; i += 2) {
      int xs = flower_[b][i];
      int xns = flower_[b][i + 1];
      pa_[xs] = cell(xns, xs).u;
      s_[xs] = 1;
      s_[xns] = 0;
      slack_[xs] = 0;
      set_slack(xns);
      q_push(xns);
    }
    s_[xr] = 1;
    pa_[xr] = pa_[b];
    for (size_t i = pr + 1; i < flower_[b].size(); ++i) {
      int xs = flower_[b][static_cast<int>(i)];
      s_[xs] = -1;
      set_slack(xs);
    }
    st_[b] = 0;
  }

  bool on_found_edge(Cell e) {
    int u = st_[e.u];
    int v = st_[e.v];
    if (s_[v] == -1) {
      pa_[v] = e.u;
      s_[v] = 1;
      int nu = st_[match_[v]];
      slack_[v] = 0;
      slack_[nu] = 0;
      s_[nu] = 0;
      q_push(nu);
    } else if (s_[v] == 0) {
      int anchor = get_lca(u, v);
      if (!anchor) {
        augment(u, v);
        augment(v, u);
        return true;
      }
      add_blossom(u, anchor, v);
    }
    return false;
  }

  // Grows the forest from every free surface node until one augmentation
  // happens (true) or the duals prove no perfect matching exists (false).
  bool phase() {
    std::fill(s_.begin(), s_.begin() + n_x_ + 1, -1);
    std::fill(slack_.begin(), slack_.begin() + n_x_ + 1, 0);
    q_.clear();
    for (int x = 1; x <= n_x_; ++x)
      if (st_[x] == x && !match_[x]) {
        pa_[x] = 0;
        s_[x] = 0;
        q_push(x);
      }
    if (q_.empty()) return false;
    for (;;) {
      while (!q_.empty()) {
        int v = q_.front();
        q_.pop_front();
        if (s_[st_[v]] == 1) continue;
        for (int u = 1; u <= n_; ++u)
          if (cell(v, u).w && st_[v] != st_[u]) {
            if (e_delta(cell(v, u)) == 0) {
              if (on_found_edge(cell(v, u))) return true;
            } else {
              update_slack(v, st_[u]);
            }
          }
      }
      std::optional<Rational> d;
      auto lower = [&](Rational x) {
        if (!d || x < *d) d = std::move(x);
      };
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st_[b] == b && s_[b] == 1) lower(lab_[b] / 2);
      for (int x = 1; x <= n_x_; ++x)
        if (st_[x] == x && slack_[x]) {
          if (s_[x] == -1)
            lower(e_delta(cell(slack_[x], x)));
          else if (s_[x] == 0)
            lower(e_delta(cell(slack_[x], x)) / 2);
        }
      if (!d) return false;  // forest cannot grow: no perfect matching
      for (int u = 1; u <= n_; ++u) {
        if (s_[st_[u]] == 0)
          lab_[u] -= *d;
        else if (s_[st_[u]] == 1)
          lab_[u] += *d;
      }
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st_[b] == b) {
          if (s_[b] == 0)
            lab_[b] += *d * 2;
          else if (s_[b] == 1)
            lab_[b] -= *d * 2;
        }
      for (int x = 1; x <= n_x_; ++x)
        if (st_[x] == x && slack_[x] && st_[slack_[x]] != x &&
            e_delta(cell(slack_[x], x)) == 0)
          if (on_found_edge(cell(slack_[x], x))) return true;
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st_[b] == b && s_[b] == 1 && lab_[b] == 0) expand_blossom(b);
    }
  }

  int n_;
  int cap_;
  int n_x_ = 0;
  int lca_stamp_ = 0;
  std::vector<Cell> cells_;
  std::vector<Rational> weights_;
  std::vector<Rational> lab_;
  std::vector<int> match_, slack_, st_, pa_, s_, vis_;
  std::vector<std::vector<int>> flower_;
  std::vector<std::vector<int>> flower_from_;
  std::deque<int> q_;
};

constexpr int kMaxWeightedVertices = 1200;

}  // namespace

std::optional<MinWeightPerfectMatching> min_weight_perfect_matching(
    const Graph& g, const WeightMap& w) {
  int n = g.vertex_count();
  if (n == 0) return MinWeightPerfectMatching{{}, Rational(0)};
  if (n % 2 != 0) return std::nullopt;
  if (n > kMaxWeightedVertices)
    throw ContractError("weighted matching engine is limited to " +
                        std::to_string(kMaxWeightedVertices) + " vertices");

  // Flip minimization into maximization; the +1 keeps every present edge at
  // positive transformed weight, and over perfect matchings the constant
  // offset is immaterial.
  Rational top(0);
  for (int id = 0; id < g.edge_count(); ++id)
    if (w[id] > top) top = w[id];
  WeightedBlossom engine(n);
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    engine.add_edge(e.u + 1, e.v + 1, top - w[id] + 1);
  }
  auto pairs = engine.solve();
  if (!pairs) return std::nullopt;

  MinWeightPerfectMatching out;
  out.total = Rational(0);
  for (auto [a, b] : *pairs) {
    int u = a - 1, v = b - 1;
    auto id = g.edge_id(u, v);
    if (!id) throw std::logic_error("matched pair is not an edge");
    out.edges.push_back({std::min(u, v), std::max(u, v)});
    out.total += w[*id];
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

}  // namespace mcover
