#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dar {

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;  // u < v

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool has(Vertex x) const { return x == u || x == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on vertices 0..n-1.
///
/// Edge ids are assigned in insertion order and stay stable; colourings and
/// copy indices are keyed by them. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  Graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edges);
  Graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  const std::vector<Vertex>& neighbours(Vertex v) const { return adjacency_[v]; }
  // Edge ids incident to v, parallel to neighbours(v).
  const std::vector<EdgeId>& incident(Vertex v) const { return incident_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  bool adjacent(Vertex a, Vertex b) const { return edge_id(a, b) >= 0; }
  // -1 when absent.
  EdgeId edge_id(Vertex a, Vertex b) const;

  int max_degree() const;
  int min_degree() const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Vertex v) const;
  Graph with_labels(std::vector<std::string> labels) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void add_edge(Vertex a, Vertex b);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<EdgeId> matrix_;  // n*n, -1 when absent
  std::vector<std::string> labels_;
};

/// Vertex order with the number of earlier neighbours of each vertex.
struct VertexOrdering {
  std::vector<Vertex> order;
  std::vector<int> back_degree;  // back_degree[i] belongs to order[i]

  int max_back_degree() const;
};

struct Degeneracy {
  int value = 0;
  VertexOrdering ordering;
};

/// Minimal d with an ordering where every vertex has at most d earlier
/// neighbours. Built by repeatedly removing a minimum-degree vertex (smallest
/// id on ties) and reversing the removal sequence.
Degeneracy degeneracy(const Graph& g);

VertexOrdering make_ordering(const Graph& g, std::vector<Vertex> order);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

struct StructuralReport {
  bool connected = false;
  std::vector<Edge> bridges;
  std::vector<Vertex> cut_vertices;
  std::optional<int> regular_of;
  int max_degree = 0;
  int min_degree = 0;
  int components = 0;
};

StructuralReport structural_report(const Graph& g);

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);

bool is_forest(const Graph& g);

/// Disjoint union; the second graph's vertices are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);
Graph disjoint_copies(const Graph& g, int copies);

/// Subgraph induced on the given vertices, relabelled 0.. in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Graph with the listed edges removed (vertex set unchanged).
Graph remove_edges(const Graph& g, std::span<const EdgeId> removed);

}  // namespace dar
