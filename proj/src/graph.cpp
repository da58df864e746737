#include "dar/graph.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

#include "dar/error.hpp"

namespace dar {

Graph::Graph(int vertex_count) : n_(vertex_count) {
  require(vertex_count >= 0, "vertex count must be non-negative");
  adjacency_.resize(n_);
  incident_.resize(n_);
  matrix_.assign(static_cast<std::size_t>(n_) * n_, -1);
}

Graph::Graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edges)
    : Graph(vertex_count) {
  for (auto [a, b] : edges) add_edge(a, b);
}

Graph::Graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(vertex_count) {
  for (auto [a, b] : edges) add_edge(a, b);
}

void Graph::add_edge(Vertex a, Vertex b) {
  require(a >= 0 && a < n_ && b >= 0 && b < n_,
          "edge endpoint out of range: " + std::to_string(a) + " " + std::to_string(b));
  require(a != b, "loop at vertex " + std::to_string(a));
  require(matrix_[static_cast<std::size_t>(a) * n_ + b] < 0,
          "parallel edge " + std::to_string(a) + " " + std::to_string(b));
  const EdgeId id = static_cast<EdgeId>(edges_.size());
  edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  adjacency_[a].push_back(b);
  adjacency_[b].push_back(a);
  incident_[a].push_back(id);
  incident_[b].push_back(id);
  matrix_[static_cast<std::size_t>(a) * n_ + b] = id;
  matrix_[static_cast<std::size_t>(b) * n_ + a] = id;
}

EdgeId Graph::edge_id(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return -1;
  return matrix_[static_cast<std::size_t>(a) * n_ + b];
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& adj : adjacency_) d = std::max(d, static_cast<int>(adj.size()));
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = std::numeric_limits<int>::max();
  for (const auto& adj : adjacency_) d = std::min(d, static_cast<int>(adj.size()));
  return d;
}

std::string Graph::label(Vertex v) const {
  if (static_cast<std::size_t>(v) < labels_.size() && !labels_[v].empty()) return labels_[v];
  return std::to_string(v);
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  require(labels.empty() || static_cast<int>(labels.size()) == n_, "label count mismatch");
  Graph copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

int VertexOrdering::max_back_degree() const {
  int d = 0;
  for (int b : back_degree) d = std::max(d, b);
  return d;
}

VertexOrdering make_ordering(const Graph& g, std::vector<Vertex> order) {
  require(static_cast<int>(order.size()) == g.vertex_count(), "ordering must cover every vertex");
  std::vector<int> position(g.vertex_count(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    require(position[order[i]] < 0, "ordering repeats a vertex");
    position[order[i]] = static_cast<int>(i);
  }
  VertexOrdering result;
  result.back_degree.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    int earlier = 0;
    for (Vertex w : g.neighbours(order[i]))
      if (position[w] < static_cast<int>(i)) ++earlier;
    result.back_degree[i] = earlier;
  }
  result.order = std::move(order);
  return result;
}

Degeneracy degeneracy(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> remaining_degree(n);
  std::vector<bool> removed(n, false);
  for (Vertex v = 0; v < n; ++v) remaining_degree[v] = g.degree(v);

  std::vector<Vertex> removal;
  int value = 0;
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!removed[v] && (best < 0 || remaining_degree[v] < remaining_degree[best])) best = v;
    value = std::max(value, remaining_degree[best]);
    removed[best] = true;
    removal.push_back(best);
    for (Vertex w : g.neighbours(best))
      if (!removed[w]) --remaining_degree[w];
  }
  std::reverse(removal.begin(), removal.end());
  return Degeneracy{value, make_ordering(g, std::move(removal))};
}

std::optional<int> girth(const Graph& g) {
  // BFS from every vertex; a non-tree edge closes a cycle of length
  // dist[a] + dist[b] + 1, and the minimum over all roots is exact.
  const int n = g.vertex_count();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n), parent(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop();
      if (2 * dist[x] >= best) break;
      for (Vertex y : g.neighbours(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<Vertex>> result;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex y : g.neighbours(comp[i]))
        if (!seen[y]) {
          seen[y] = 1;
          comp.push_back(y);
        }
    std::sort(comp.begin(), comp.end());
    result.push_back(std::move(comp));
  }
  return result;
}

bool is_forest(const Graph& g) {
  return g.edge_count() + static_cast<int>(components(g).size()) == g.vertex_count();
}

StructuralReport structural_report(const Graph& g) {
  const int n = g.vertex_count();
  StructuralReport report;
  report.max_degree = g.max_degree();
  report.min_degree = g.min_degree();
  report.components = static_cast<int>(components(g).size());
  report.connected = report.components <= 1;
  if (n > 0 && report.max_degree == report.min_degree) report.regular_of = report.max_degree;

  std::vector<int> discovery(n, -1), low(n, 0);
  std::vector<bool> is_cut(n, false);
  int clock = 0;
  std::function<void(Vertex, EdgeId)> visit = [&](Vertex x, EdgeId via) {
    discovery[x] = low[x] = clock++;
    int children = 0;
    const auto& adj = g.neighbours(x);
    const auto& inc = g.incident(x);
    for (std::size_t i = 0; i < adj.size(); ++i) {
      Vertex y = adj[i];
      if (inc[i] == via) continue;
      if (discovery[y] >= 0) {
        low[x] = std::min(low[x], discovery[y]);
        continue;
      }
      ++children;
      visit(y, inc[i]);
      low[x] = std::min(low[x], low[y]);
      if (low[y] > discovery[x]) report.bridges.push_back(g.edge(inc[i]));
      if (via >= 0 && low[y] >= discovery[x]) is_cut[x] = true;
    }
    if (via < 0 && children > 1) is_cut[x] = true;
  };
  for (Vertex s = 0; s < n; ++s)
    if (discovery[s] < 0) visit(s, -1);

  std::sort(report.bridges.begin(), report.bridges.end());
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[v]) report.cut_vertices.push_back(v);
  return report;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const Edge& e : a.edges()) edges.emplace_back(e.u, e.v);
  const int shift = a.vertex_count();
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  return Graph(a.vertex_count() + b.vertex_count(), edges);
}

Graph disjoint_copies(const Graph& g, int copies) {
  require(copies >= 1, "need at least one copy");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int c = 0; c < copies; ++c)
    for (const Edge& e : g.edges())
      edges.emplace_back(e.u + c * g.vertex_count(), e.v + c * g.vertex_count());
  return Graph(g.vertex_count() * copies, edges);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const Edge& e : g.edges())
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.emplace_back(index[e.u], index[e.v]);
  return Graph(static_cast<int>(vertices.size()), edges);
}

Graph remove_edges(const Graph& g, std::span<const EdgeId> removed) {
  std::vector<bool> drop(g.edge_count(), false);
  for (EdgeId e : removed) drop[e] = true;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!drop[e]) edges.emplace_back(g.edge(e).u, g.edge(e).v);
  return Graph(g.vertex_count(), edges).with_labels(g.labels());
}

}  // namespace dar
