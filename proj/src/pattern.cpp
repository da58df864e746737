#include "dar/pattern.hpp"

#include <algorithm>

#include "dar/copies.hpp"
#include "dar/error.hpp"

namespace dar {

std::string to_string(PatternClass c) {
  switch (c) {
    case PatternClass::star: return "star";
    case PatternClass::matching: return "matching";
    case PatternClass::tree_non_star: return "tree-non-star";
    case PatternClass::forest: return "forest";
    case PatternClass::cycle: return "cycle";
    case PatternClass::other: return "other";
  }
  return "other";
}

PatternClass classify(const Graph& g) {
  const int e = g.edge_count();
  const auto comps = components(g);
  int nontrivial = 0;
  for (const auto& c : comps)
    if (c.size() > 1) ++nontrivial;

  if (e > 0 && is_forest(g)) {
    if (nontrivial == 1) {
      for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == e) return PatternClass::star;
      return PatternClass::tree_non_star;
    }
    if (g.max_degree() == 1) return PatternClass::matching;
    return PatternClass::forest;
  }
  if (nontrivial == 1 && e > 0) {
    bool two_regular = true;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) != 0 && g.degree(v) != 2) two_regular = false;
    if (two_regular) return PatternClass::cycle;
  }
  return PatternClass::other;
}

Pattern::Pattern(Graph graph, std::string name)
    : graph_(std::move(graph)), name_(std::move(name)), degeneracy_(dar::degeneracy(graph_)) {
  require(graph_.edge_count() >= 1, "pattern needs at least one edge");
  for (Vertex v = 0; v < graph_.vertex_count(); ++v)
    require(graph_.degree(v) > 0, "pattern has an isolated vertex " + std::to_string(v));
  require(graph_.vertex_count() <= 12, "patterns are limited to 12 vertices");

  for_each_monomorphism(graph_, graph_, [&](const std::vector<Vertex>& map) {
    automorphisms_.push_back(map);
    return true;
  });
  std::sort(automorphisms_.begin(), automorphisms_.end());
  class_ = classify(graph_);
}

bool Pattern::exceptional_forest() const {
  return class_ == PatternClass::star ||
         (class_ == PatternClass::matching && graph_.edge_count() == 2);
}

namespace {

ArdBounds general_bounds(const Pattern& h) {
  const int e = h.edge_count();
  const int k = h.degeneracy();
  return ArdBounds{e - 1, k * e - k + h.vertex_count() - 1,
                   "lower e(H)-1; upper k*e(H) - k + v(H) - 1 with degeneracy k=" +
                       std::to_string(k)};
}

}  // namespace

ArdBounds ar_d_bounds(const Pattern& h) {
  const int e = h.edge_count();
  switch (h.classification()) {
    case PatternClass::star:
      return ArdBounds{e, e, "forest: star, exact value e(H)"};
    case PatternClass::matching:
      if (e == 2) return ArdBounds{2, 2, "forest: two-edge matching, exact value e(H)"};
      return ArdBounds{e - 1, e - 1, "forest: exact value e(H)-1"};
    case PatternClass::tree_non_star:
    case PatternClass::forest:
      return ArdBounds{e - 1, e - 1, "forest: exact value e(H)-1"};
    case PatternClass::cycle: {
      const int k = h.vertex_count();
      if (k == 3) return ArdBounds{2, 2, "cycle C_3: exact value 2"};
      if (k == 4) return ArdBounds{4, 4, "cycle C_4: exact value 4"};
      ArdBounds general = general_bounds(h);
      int upper = (k % 2 == 0) ? 2 * (k - 1) : 2 * (k + 2);
      std::string source = (k % 2 == 0) ? "cycle bound 2(k-1) for even k"
                                        : "cycle bound 2(k+2) for odd k";
      if (k == 5) {
        upper = 6;
        source = "cycle C_5: upper 6 = 2*d(5) from the gadget G_{5,3}";
      }
      if (*general.upper < upper) {
        upper = *general.upper;
        source = general.provenance;
      }
      return ArdBounds{k - 1, upper, "lower k-1; " + source};
    }
    case PatternClass::other:
      return general_bounds(h);
  }
  return general_bounds(h);
}

Graph with_disjoint_matching(const Graph& h, int t) {
  require(t >= 0, "matching size must be non-negative");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const Edge& e : h.edges()) edges.emplace_back(e.u, e.v);
  const int n = h.vertex_count();
  for (int i = 0; i < t; ++i) edges.emplace_back(n + 2 * i, n + 2 * i + 1);
  return Graph(n + 2 * t, edges);
}

ArdBounds ar_d_bounds_with_matching(const Pattern& h, int t) {
  const Pattern augmented(with_disjoint_matching(h.graph(), t));
  ArdBounds bounds = ar_d_bounds(augmented);
  const ArdBounds base = ar_d_bounds(h);
  if (base.upper && t >= *base.upper + 1 - h.edge_count()) {
    const int exact = h.edge_count() + t - 1;
    return ArdBounds{exact, exact,
                     "H plus a matching of t >= upper(H) + 1 - e(H) edges: exact value e(H_t)-1"};
  }
  return bounds;
}

}  // namespace dar
