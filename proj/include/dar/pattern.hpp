#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dar/graph.hpp"

namespace dar {

enum class PatternClass { star, matching, tree_non_star, forest, cycle, other };

std::string to_string(PatternClass c);

/// A target graph H prepared for copy enumeration and embedding.
///
/// Patterns have no isolated vertices: an edge set then determines its vertex
/// map up to an automorphism, which is what lets copies be deduplicated by
/// canonical maps.
class Pattern {
 public:
  explicit Pattern(Graph graph, std::string name = {});

  const Graph& graph() const { return graph_; }
  const std::string& name() const { return name_; }
  int degeneracy() const { return degeneracy_.value; }
  const VertexOrdering& degeneracy_order() const { return degeneracy_.ordering; }
  // The full automorphism group (a generating set in particular), identity first.
  const std::vector<std::vector<Vertex>>& automorphisms() const { return automorphisms_; }
  PatternClass classification() const { return class_; }
  // Stars and the two-edge matching, whose AR_d equals e(H) rather than e(H) - 1.
  bool exceptional_forest() const;

  int vertex_count() const { return graph_.vertex_count(); }
  int edge_count() const { return graph_.edge_count(); }

 private:
  Graph graph_;
  std::string name_;
  Degeneracy degeneracy_;
  std::vector<std::vector<Vertex>> automorphisms_;
  PatternClass class_;
};

PatternClass classify(const Graph& g);

struct ArdBounds {
  int lower = 0;
  std::optional<int> upper;
  std::string provenance;
};

/// Best known lower/upper bounds on the degree anti-Ramsey number of h.
ArdBounds ar_d_bounds(const Pattern& h);

/// Bounds for H plus a disjoint matching of t edges. Once t is large enough
/// (t >= upper(H) + 1 - e(H)) the value is exactly e(H) + t - 1; no host is
/// built for it.
ArdBounds ar_d_bounds_with_matching(const Pattern& h, int t);

/// Graph of h plus t disjoint edges.
Graph with_disjoint_matching(const Graph& h, int t);

}  // namespace dar
