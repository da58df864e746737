#include "dar/matching.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "dar/constructions.hpp"
#include "dar/copies.hpp"
#include "dar/error.hpp"

namespace dar {

namespace {

bool odd_component_among(const Graph& g, const std::vector<bool>& matched) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (matched[s] || seen[s]) continue;
    int size = 0;
    stack.assign(1, s);
    seen[s] = true;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex w : g.neighbours(v))
        if (!matched[w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    if (size % 2 == 1) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<EdgeId>> perfect_matching(const Graph& g) {
  if (g.vertex_count() % 2 == 1) return std::nullopt;
  std::vector<bool> matched(g.vertex_count(), false);
  std::vector<EdgeId> chosen;
  std::function<bool()> extend = [&]() {
    Vertex v = 0;
    while (v < g.vertex_count() && matched[v]) ++v;
    if (v == g.vertex_count()) return true;
    if (odd_component_among(g, matched)) return false;
    std::vector<std::pair<Vertex, EdgeId>> options;
    for (std::size_t i = 0; i < g.neighbours(v).size(); ++i) options.emplace_back(g.neighbours(v)[i], g.incident(v)[i]);
    std::sort(options.begin(), options.end());
    for (const auto& [w, e] : options) {
      if (matched[w]) continue;
      matched[v] = matched[w] = true;
      chosen.push_back(e);
      if (extend()) return true;
      chosen.pop_back();
      matched[v] = matched[w] = false;
    }
    return false;
  };
  if (!extend()) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

TwoFactorDecomposition TwoFactorDecomposition::build(const Graph& g, const std::vector<EdgeId>& matching) {
  TwoFactorDecomposition d;
  std::vector<bool> in_m(g.edge_count(), false), covered(g.vertex_count(), false);
  for (EdgeId e : matching) {
    require(e >= 0 && e < g.edge_count(), "matching edge out of range");
    const Edge& edge = g.edge(e);
    require(!covered[edge.u] && !covered[edge.v], "edges of M share a vertex");
    covered[edge.u] = covered[edge.v] = true;
    in_m[e] = true;
    d.matching.push_back(edge);
  }
  require(std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }), "M is not perfect");
  std::sort(d.matching.begin(), d.matching.end());

  std::vector<std::vector<Vertex>> rest(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!in_m[e]) {
      rest[g.edge(e).u].push_back(g.edge(e).v);
      rest[g.edge(e).v].push_back(g.edge(e).u);
    }
  for (auto& nb : rest) {
    require(nb.size() == 2, "G - M is not 2-regular");
    std::sort(nb.begin(), nb.end());
  }
  std::vector<bool> seen(g.vertex_count(), false);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> cycle{s};
    seen[s] = true;
    Vertex prev = s, cur = rest[s][0];
    while (cur != s) {
      cycle.push_back(cur);
      seen[cur] = true;
      const Vertex next = rest[cur][0] == prev ? rest[cur][1] : rest[cur][0];
      prev = cur;
      cur = next;
    }
    d.cycles.push_back(std::move(cycle));
  }
  return d;
}

bool TwoFactorDecomposition::in_matching(Vertex a, Vertex b) const {
  return std::binary_search(matching.begin(), matching.end(), Edge{std::min(a, b), std::max(a, b)});
}

namespace {

const std::vector<Vertex>& odd_cycle(const TwoFactorDecomposition& d, int index) {
  require(index >= 0 && index < static_cast<int>(d.cycles.size()), "no such cycle");
  const auto& cycle = d.cycles[index];
  require(cycle.size() % 2 == 1, "cycle " + std::to_string(index) + " is even");
  return cycle;
}

Edge make_edge(Vertex a, Vertex b) { return {std::min(a, b), std::max(a, b)}; }

// Membership in I = {i : v_i v_{i+3} in M}.
std::vector<bool> chord_positions(const TwoFactorDecomposition& d, const std::vector<Vertex>& cycle) {
  const int n = static_cast<int>(cycle.size());
  std::vector<bool> in_i(n);
  for (int i = 0; i < n; ++i) {
    const Vertex a = cycle[i], b = cycle[(i + 3) % n];
    in_i[i] = a != b && d.in_matching(a, b);
  }
  return in_i;
}

}  // namespace

std::vector<Edge> free_edges(const TwoFactorDecomposition& d, int cycle_index) {
  const auto& cycle = odd_cycle(d, cycle_index);
  const int n = static_cast<int>(cycle.size());
  const auto in_i = chord_positions(d, cycle);
  auto at = [&](int i) { return in_i[((i % n) + n) % n]; };
  std::vector<Edge> result;
  for (int i = 0; i < n; ++i)
    if (!at(i - 2) && !at(i - 1) && !at(i)) result.push_back(make_edge(cycle[i], cycle[(i + 1) % n]));
  return result;
}

Edge odd_cycle_free_edge(const TwoFactorDecomposition& d, int cycle_index) {
  const auto& cycle = odd_cycle(d, cycle_index);
  const int n = static_cast<int>(cycle.size());
  const auto in_i = chord_positions(d, cycle);
  auto at = [&](int i) { return in_i[i % n]; };
  auto v = [&](int i) { return cycle[i % n]; };
  for (int i = 0; i < n; ++i) {
    if (at(i + 1) || at(i + 2)) continue;
    return at(i) ? make_edge(v(i + 3), v(i + 4)) : make_edge(v(i + 2), v(i + 3));
  }
  throw InvariantViolation("odd cycle without two consecutive positions outside I");
}

bool free_of_rainbow_c4(const Graph& g, const EdgeColouring& c) {
  require(c.edge_count() == g.edge_count(), "colouring does not match the graph");
  const Pattern c4(cycle_graph(4), "c4");
  bool clean = true;
  for_each_copy(g, c4, [&](const Copy& copy) {
    std::set<Colour> colours;
    for (EdgeId e : copy.edges) {
      if (!c.coloured(e)) return true;
      colours.insert(c.at(e));
    }
    if (colours.size() == 4) clean = false;
    return clean;
  });
  return clean;
}

EdgeColouring avoid_rainbow_c4_cubic(const Graph& g, const TwoFactorDecomposition& d) {
  EdgeColouring c(g.edge_count());
  for (const Edge& e : d.matching) c.set(g.edge_id(e.u, e.v), 4);
  for (int idx = 0; idx < static_cast<int>(d.cycles.size()); ++idx) {
    const auto& cycle = d.cycles[idx];
    const int n = static_cast<int>(cycle.size());
    // Walk the cycle starting just after the removed free edge (odd case) or at v_0.
    int start = 0;
    if (n % 2 == 1) {
      const Edge f = odd_cycle_free_edge(d, idx);
      c.set(g.edge_id(f.u, f.v), 3);
      for (int i = 0; i < n; ++i)
        if (make_edge(cycle[i], cycle[(i + 1) % n]) == f) start = (i + 1) % n;
    }
    const int path_edges = n % 2 == 1 ? n - 1 : n;
    for (int s = 0; s < path_edges; ++s) {
      const Vertex a = cycle[(start + s) % n], b = cycle[(start + s + 1) % n];
      c.set(g.edge_id(a, b), s % 2 == 0 ? 1 : 2);
    }
  }
  ensure(is_proper(g, c), "four-colour scheme is not proper");
  ensure(free_of_rainbow_c4(g, c), "four-colour scheme has a rainbow C_4");
  return c;
}

EdgeColouring avoid_rainbow_c4_cubic(const Graph& g) {
  const StructuralReport r = structural_report(g);
  require(r.regular_of == 3, "graph is not 3-regular");
  require(r.connected, "graph is not connected");
  require(r.bridges.empty(), "graph has a bridge " + std::to_string(r.bridges.empty() ? 0 : r.bridges[0].u) + "-" +
                                 std::to_string(r.bridges.empty() ? 0 : r.bridges[0].v));
  const auto m = perfect_matching(g);
  ensure(m.has_value(), "bridgeless cubic graph without a perfect matching");
  return avoid_rainbow_c4_cubic(g, TwoFactorDecomposition::build(g, *m));
}

EdgeColouring extend_through_degree2(const Graph& g, Vertex u, const EdgeColouring& c) {
  require(u >= 0 && u < g.vertex_count(), "vertex out of range");
  require(g.degree(u) == 2, "u must have degree 2");
  require(g.max_degree() <= 3, "maximum degree must be at most 3");
  require(c.edge_count() == g.edge_count(), "colouring does not match the graph");
  Vertex v1 = g.neighbours(u)[0], v2 = g.neighbours(u)[1];
  if (v1 > v2) std::swap(v1, v2);
  const EdgeId uv1 = g.edge_id(u, v1), uv2 = g.edge_id(u, v2);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (e == uv1 || e == uv2)
      require(!c.coloured(e), "edges at u must be uncoloured");
    else
      require(c.coloured(e), "every edge away from u must be coloured");
  }
  require(is_proper_partial(g, c), "colouring of g - u is not proper");
  require(free_of_rainbow_c4(g, c), "colouring of g - u has a rainbow C_4");

  const Colour alpha = c.max_colour() + 1, beta = c.max_colour() + 2;
  std::vector<Vertex> common;
  for (Vertex w : g.neighbours(v1))
    if (w != u && g.adjacent(w, v2)) common.push_back(w);
  std::sort(common.begin(), common.end());

  EdgeColouring out = c;
  auto col = [&](Vertex a, Vertex b) { return out.at(g.edge_id(a, b)); };
  auto set = [&](Vertex a, Vertex b, Colour k) { out.set(g.edge_id(a, b), k); };

  if (common.empty()) {
    set(u, v1, alpha);
    set(u, v2, beta);
  } else if (common.size() == 2) {
    const Vertex w1 = common[0], w2 = common[1];
    int i = 0;
    if (col(v1, w1) == col(v2, w2))
      i = 1;
    else if (col(v1, w2) == col(v2, w1))
      i = 2;
    ensure(i != 0, "no i with c(v1 w_i) = c(v2 w_{3-i}) although the 4-cycle is not rainbow");
    const Vertex wi = i == 1 ? w1 : w2, wo = i == 1 ? w2 : w1;
    const Colour through = col(v2, wi);
    set(v1, wo, alpha);
    set(u, v1, through);
    set(u, v2, alpha);
  } else if (common.size() == 1) {
    const Vertex w = common[0];
    std::vector<std::pair<Vertex, Vertex>> squares;  // (z1, z2) with v1 w z1 z2 v1
    for (Vertex z1 : g.neighbours(w)) {
      if (z1 == v1 || z1 == u) continue;
      for (Vertex z2 : g.neighbours(v1))
        if (z2 != w && z2 != u && z2 != z1 && g.adjacent(z1, z2)) squares.emplace_back(z1, z2);
    }
    ensure(squares.size() <= 1, "more than one C_4 through v1 w");
    if (squares.empty()) {
      set(v1, w, alpha);
      set(u, v2, alpha);
      set(u, v1, beta);
    } else {
      const auto [z1, z2] = squares[0];
      if (col(v1, w) == col(z1, z2)) {
        const Colour through = col(v2, w);
        set(v1, z2, alpha);
        set(u, v1, through);
        set(u, v2, beta);
      } else {
        ensure(col(v1, z2) == col(w, z1), "the C_4 through v1 w has no repeated opposite colours");
        set(v1, w, alpha);
        set(u, v2, alpha);
        set(u, v1, beta);
      }
    }
  } else {
    throw InvariantViolation("common neighbourhood of v1 and v2 is too large for maximum degree 3");
  }

  ensure(is_proper(g, out), "extended colouring is not proper");
  ensure(free_of_rainbow_c4(g, out), "extended colouring has a rainbow C_4");
  return out;
}

}  // namespace dar
