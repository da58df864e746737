#pragma once

#include <functional>
#include <vector>

#include "dar/graph.hpp"
#include "dar/pattern.hpp"

namespace dar {

/// One subgraph of a host isomorphic to a pattern.
struct Copy {
  std::vector<Vertex> vertex_map;  // pattern vertex -> host vertex
  std::vector<EdgeId> edges;       // host edge id for each pattern edge, pattern-edge order
};

/// Calls visit(map) for every injective, edge-preserving map from `pattern`
/// into `host` (not necessarily induced). Stop early by returning false.
void for_each_monomorphism(const Graph& pattern, const Graph& host,
                           const std::function<bool(const std::vector<Vertex>&)>& visit);

/// Every copy of h in g exactly once. A map is reported only when it is the
/// lexicographically smallest among its compositions with Aut(h).
void for_each_copy(const Graph& g, const Pattern& h, const std::function<bool(const Copy&)>& visit);

std::vector<Copy> enumerate_copies(const Graph& g, const Pattern& h);

/// Copies of h in g plus, for each host edge, the copies that use it.
class CopyIndex {
 public:
  CopyIndex(const Graph& g, const Pattern& h);

  const std::vector<Copy>& copies() const { return copies_; }
  const std::vector<int>& copies_through(EdgeId e) const { return by_edge_[e]; }
  int size() const { return static_cast<int>(copies_.size()); }

 private:
  std::vector<Copy> copies_;
  std::vector<std::vector<int>> by_edge_;
};

}  // namespace dar
