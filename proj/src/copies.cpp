#include "dar/copies.hpp"

#include <algorithm>

#include "dar/error.hpp"

namespace dar {
namespace {

// Pattern vertices in BFS order per component, each with an earlier-placed
// neighbour (or -1 when it starts a new component).
struct SearchPlan {
  std::vector<Vertex> order;
  std::vector<Vertex> anchor;
  std::vector<std::vector<Vertex>> earlier_neighbours;
};

SearchPlan make_plan(const Graph& pattern) {
  SearchPlan plan;
  const int n = pattern.vertex_count();
  std::vector<int> position(n, -1);
  for (const auto& comp : components(pattern)) {
    // Start from a maximum-degree vertex so the most constrained choices come first.
    Vertex start = comp.front();
    for (Vertex v : comp)
      if (pattern.degree(v) > pattern.degree(start)) start = v;
    std::size_t head = plan.order.size();
    position[start] = static_cast<int>(plan.order.size());
    plan.order.push_back(start);
    while (head < plan.order.size()) {
      Vertex x = plan.order[head++];
      std::vector<Vertex> next(pattern.neighbours(x));
      std::sort(next.begin(), next.end());
      for (Vertex y : next)
        if (position[y] < 0) {
          position[y] = static_cast<int>(plan.order.size());
          plan.order.push_back(y);
        }
    }
  }
  plan.anchor.assign(n, -1);
  plan.earlier_neighbours.resize(n);
  for (int i = 0; i < n; ++i) {
    Vertex p = plan.order[i];
    for (Vertex q : pattern.neighbours(p))
      if (position[q] < i) plan.earlier_neighbours[i].push_back(q);
    if (!plan.earlier_neighbours[i].empty()) {
      plan.anchor[i] = *std::min_element(
          plan.earlier_neighbours[i].begin(), plan.earlier_neighbours[i].end(),
          [&](Vertex a, Vertex b) { return position[a] < position[b]; });
    }
  }
  return plan;
}

}  // namespace

void for_each_monomorphism(const Graph& pattern, const Graph& host,
                           const std::function<bool(const std::vector<Vertex>&)>& visit) {
  const int n = pattern.vertex_count();
  if (n > host.vertex_count()) return;
  if (n == 0) {
    visit({});
    return;
  }
  const SearchPlan plan = make_plan(pattern);
  std::vector<Vertex> map(n, -1);
  std::vector<bool> used(host.vertex_count(), false);
  bool stop = false;

  auto consistent = [&](int depth, Vertex candidate) {
    if (used[candidate]) return false;
    const Vertex p = plan.order[depth];
    if (host.degree(candidate) < pattern.degree(p)) return false;
    for (Vertex q : plan.earlier_neighbours[depth])
      if (!host.adjacent(map[q], candidate)) return false;
    return true;
  };

  std::function<void(int)> extend = [&](int depth) {
    if (stop) return;
    if (depth == n) {
      if (!visit(map)) stop = true;
      return;
    }
    const Vertex p = plan.order[depth];
    auto place = [&](Vertex candidate) {
      if (!consistent(depth, candidate)) return;
      map[p] = candidate;
      used[candidate] = true;
      extend(depth + 1);
      used[candidate] = false;
      map[p] = -1;
    };
    if (plan.anchor[depth] >= 0) {
      std::vector<Vertex> candidates(host.neighbours(map[plan.anchor[depth]]));
      std::sort(candidates.begin(), candidates.end());
      for (Vertex c : candidates) {
        place(c);
        if (stop) return;
      }
    } else {
      for (Vertex c = 0; c < host.vertex_count(); ++c) {
        place(c);
        if (stop) return;
      }
    }
  };
  extend(0);
}

void for_each_copy(const Graph& g, const Pattern& h, const std::function<bool(const Copy&)>& visit) {
  const auto& automorphisms = h.automorphisms();
  const Graph& pattern = h.graph();
  const int n = pattern.vertex_count();
  for_each_monomorphism(pattern, g, [&](const std::vector<Vertex>& map) {
    // Canonical iff no automorphism sigma gives a lexicographically smaller
    // sequence (map[sigma[0]], ..., map[sigma[n-1]]).
    for (std::size_t a = 1; a < automorphisms.size(); ++a) {
      const auto& sigma = automorphisms[a];
      for (int i = 0; i < n; ++i) {
        const Vertex image = map[sigma[i]];
        if (image < map[i]) return true;
        if (image > map[i]) break;
      }
    }
    Copy copy;
    copy.vertex_map = map;
    copy.edges.reserve(pattern.edge_count());
    for (const Edge& e : pattern.edges()) copy.edges.push_back(g.edge_id(map[e.u], map[e.v]));
    return visit(copy);
  });
}

std::vector<Copy> enumerate_copies(const Graph& g, const Pattern& h) {
  std::vector<Copy> result;
  for_each_copy(g, h, [&](const Copy& c) {
    result.push_back(c);
    return true;
  });
  return result;
}

CopyIndex::CopyIndex(const Graph& g, const Pattern& h) : copies_(enumerate_copies(g, h)) {
  by_edge_.resize(g.edge_count());
  for (int i = 0; i < static_cast<int>(copies_.size()); ++i)
    for (EdgeId e : copies_[i].edges) by_edge_[e].push_back(i);
}

}  // namespace dar
