#include "mcover/graph.hpp"

#include <algorithm>
#include <sstream>

#include "mcover/errors.hpp"

namespace mcover {

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::all(int n) {
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = i;
  return VertexSet(std::move(m));
}

Graph::Graph(int vertex_count, const std::vector<Edge>& edges)
    : n_(vertex_count) {
  if (n_ < 0) throw ContractError("negative vertex count");
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const Edge& e : edges) {
    int u = e.u, v = e.v;
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw ContractError("edge endpoint out of range");
    if (u == v) throw ContractError("self-loop on vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    normalized.push_back({u, v});
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()),
                   normalized.end());
  edges_ = std::move(normalized);

  adj_.resize(n_);
  inc_.resize(n_);
  for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
    const Edge& e = edges_[id];
    adj_[e.u].push_back(e.v);
    inc_[e.u].push_back(id);
    adj_[e.v].push_back(e.u);
    inc_[e.v].push_back(id);
  }
  // Edges are sorted, so each adjacency list built this way is sorted for the
  // smaller endpoint; re-sort the pair of parallel arrays for the other side.
  for (int v = 0; v < n_; ++v) {
    std::vector<int> order(adj_[v].size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return adj_[v][a] < adj_[v][b]; });
    std::vector<int> a(adj_[v].size()), in(adj_[v].size());
    for (size_t i = 0; i < order.size(); ++i) {
      a[i] = adj_[v][order[i]];
      in[i] = inc_[v][order[i]];
    }
    adj_[v] = std::move(a);
    inc_[v] = std::move(in);
  }
}

const std::vector<int>& Graph::neighbors(int v) const {
  require_vertex(v);
  return adj_[v];
}

const std::vector<int>& Graph::incident_edges(int v) const {
  require_vertex(v);
  return inc_[v];
}

int Graph::degree(int v) const {
  require_vertex(v);
  return static_cast<int>(adj_[v].size());
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, static_cast<int>(adj_[v].size()));
  return d;
}

bool Graph::has_edge(int u, int v) const { return edge_id(u, v).has_value(); }

std::optional<int> Graph::edge_id(int u, int v) const {
  require_vertex(u);
  require_vertex(v);
  if (u == v) return std::nullopt;
  if (u > v) std::swap(u, v);
  Edge probe{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), probe);
  if (it != edges_.end() && *it == probe)
    return static_cast<int>(it - edges_.begin());
  return std::nullopt;
}

void Graph::require_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw ContractError("vertex " + std::to_string(v) + " out of range [0, " +
                        std::to_string(n_) + ")");
}

namespace {

// Strips comments, splits into whitespace-separated fields.
std::vector<std::string> fields_of_line(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos)
    line = line.substr(0, hash);
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_int_field(const std::string& tok, int line_no) {
  size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line_no, "expected integer, got '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError(line_no, "expected integer, got '" + tok + "'");
  return value;
}

template <typename LineFn>
void for_each_data_line(std::string_view text, LineFn&& fn) {
  int line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto fields = fields_of_line(text.substr(start, end - start));
    if (!fields.empty()) fn(fields, line_no);
    start = end + 1;
  }
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<int> declared_n;
  std::vector<Edge> edges;
  int max_seen = -1;
  bool first_data_line = true;

  for_each_data_line(text, [&](const std::vector<std::string>& fields,
                               int line_no) {
    if (first_data_line && fields.size() == 1) {
      declared_n = parse_int_field(fields[0], line_no);
      if (*declared_n < 0) throw ParseError(line_no, "negative vertex count");
      first_data_line = false;
      return;
    }
    first_data_line = false;
    if (fields.size() != 2)
      throw ParseError(line_no, "expected 'u v'");
    int u = parse_int_field(fields[0], line_no);
    int v = parse_int_field(fields[1], line_no);
    if (u < 0 || v < 0) throw ParseError(line_no, "negative vertex id");
    if (u == v)
      throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
    if (declared_n && (u >= *declared_n || v >= *declared_n))
      throw ParseError(line_no, "vertex id exceeds declared count");
    edges.push_back({u, v});
    max_seen = std::max({max_seen, u, v});
  });

  int n = declared_n ? *declared_n : max_seen + 1;
  return Graph(n, edges);
}

std::string serialize_graph(const Graph& g) {
  std::string out = std::to_string(g.vertex_count());
  out += '\n';
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  std::vector<char> in_s(g.vertex_count(), 0);
  for (int v : s) {
    g.require_vertex(v);
    in_s[v] = 1;
  }
  std::vector<int> out;
  for (int v : s)
    for (int w : g.neighbors(v))
      if (!in_s[w]) out.push_back(w);
  return VertexSet(std::move(out));
}

bool is_stable(const Graph& g, const VertexSet& s) {
  std::vector<char> in_s(g.vertex_count(), 0);
  for (int v : s) {
    g.require_vertex(v);
    in_s[v] = 1;
  }
  for (int v : s)
    for (int w : g.neighbors(v))
      if (in_s[w]) return false;
  return true;
}

LineGraphResult line_graph(const Graph& h) {
  if (h.vertex_count() == 0)
    throw ContractError("line graph of the empty graph is undefined");
  std::vector<Edge> edges;
  std::vector<VertexSet> cliques;
  for (int v = 0; v < h.vertex_count(); ++v) {
    const auto& inc = h.incident_edges(v);
    if (inc.empty()) continue;
    // Two distinct edges of a simple graph share at most one endpoint, so
    // every line-graph edge is produced by exactly one of these cliques.
    for (size_t i = 0; i < inc.size(); ++i)
      for (size_t j = i + 1; j < inc.size(); ++j)
        edges.push_back({std::min(inc[i], inc[j]), std::max(inc[i], inc[j])});
    cliques.emplace_back(inc);
  }
  return LineGraphResult{Graph(h.edge_count(), edges), std::move(cliques)};
}

WeightMap::WeightMap(const Graph& g, std::vector<Rational> by_edge)
    : by_edge_(std::move(by_edge)) {
  if (static_cast<int>(by_edge_.size()) != g.edge_count())
    throw ContractError("weight map does not cover every edge");
  for (const Rational& w : by_edge_)
    if (w < 0) throw ContractError("negative edge weight");
}

WeightMap WeightMap::uniform(const Graph& g, const Rational& w) {
  return WeightMap(g, std::vector<Rational>(g.edge_count(), w));
}

WeightMap parse_weights(const Graph& g, std::string_view text) {
  std::vector<Rational> by_edge(g.edge_count());
  std::vector<char> seen(g.edge_count(), 0);
  for_each_data_line(text, [&](const std::vector<std::string>& fields,
                               int line_no) {
    if (fields.size() != 3) throw ParseError(line_no, "expected 'u v w'");
    int u = parse_int_field(fields[0], line_no);
    int v = parse_int_field(fields[1], line_no);
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
      throw ParseError(line_no, "vertex id out of range");
    auto id = g.edge_id(u, v);
    if (!id) throw ParseError(line_no, "weight for a non-edge");
    Rational w;
    try {
      w = parse_rational(fields[2]);
    } catch (const ContractError& err) {
      throw ParseError(line_no, err.what());
    }
    if (w < 0) throw ParseError(line_no, "negative weight");
    if (seen[*id]) throw ParseError(line_no, "duplicate weight for edge");
    seen[*id] = 1;
    by_edge[*id] = w;
  });
  for (int id = 0; id < g.edge_count(); ++id)
    if (!seen[id])
      throw ParseError(1, "no weight given for edge " +
                              std::to_string(g.edge(id).u) + " " +
                              std::to_string(g.edge(id).v));
  return WeightMap(g, std::move(by_edge));
}

LBounds::LBounds(std::vector<int> by_vertex) : by_vertex_(std::move(by_vertex)) {
  for (int b : by_vertex_)
    if (b < 0) throw ContractError("negative degree lower bound");
}

LBounds LBounds::uniform(int n, int value) {
  return LBounds(std::vector<int>(n, value));
}

LBounds parse_lbounds(const Graph& g, std::string_view text) {
  std::vector<int> by_vertex(g.vertex_count(), 0);
  for_each_data_line(text, [&](const std::vector<std::string>& fields,
                               int line_no) {
    if (fields.size() != 1 && fields.size() != 2)
      throw ParseError(line_no, "expected 'v' or 'v l'");
    int v = parse_int_field(fields[0], line_no);
    if (v < 0 || v >= g.vertex_count())
      throw ParseError(line_no, "vertex id out of range");
    int bound = fields.size() == 2 ? parse_int_field(fields[1], line_no) : 1;
    if (bound < 0) throw ParseError(line_no, "negative bound");
    by_vertex[v] = bound;
  });
  return LBounds(std::move(by_vertex));
}

VertexSet parse_vertex_set(const Graph& g, std::string_view text) {
  std::vector<int> members;
  for_each_data_line(text, [&](const std::vector<std::string>& fields,
                               int line_no) {
    if (fields.size() != 1) throw ParseError(line_no, "expected 'v'");
    int v = parse_int_field(fields[0], line_no);
    if (v < 0 || v >= g.vertex_count())
      throw ParseError(line_no, "vertex id out of range");
    members.push_back(v);
  });
  return VertexSet(std::move(members));
}

}  // namespace mcover
