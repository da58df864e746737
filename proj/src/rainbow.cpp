#include "dar/rainbow.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "dar/error.hpp"

namespace dar {

bool Embedding::is_rainbow() const {
  std::set<Colour> distinct(colours.begin(), colours.end());
  return distinct.size() == colours.size();
}

Embedding make_embedding(const Graph& host, const EdgeColouring& c, const Pattern& h,
                         std::vector<Vertex> vertex_map) {
  Embedding result;
  result.vertex_map = std::move(vertex_map);
  for (const Edge& e : h.graph().edges()) {
    const EdgeId image = host.edge_id(result.vertex_map[e.u], result.vertex_map[e.v]);
    ensure(image >= 0, "embedding maps a pattern edge onto a non-edge");
    result.image_edges.push_back(image);
    result.colours.push_back(c.at(image));
  }
  return result;
}

bool is_rainbow_embedding(const Graph& host, const EdgeColouring& c, const Pattern& h,
                          const Embedding& embedding) {
  if (static_cast<int>(embedding.vertex_map.size()) != h.vertex_count()) return false;
  std::set<Vertex> images(embedding.vertex_map.begin(), embedding.vertex_map.end());
  if (static_cast<int>(images.size()) != h.vertex_count()) return false;
  if (embedding.image_edges.size() != h.graph().edges().size()) return false;
  for (std::size_t i = 0; i < h.graph().edges().size(); ++i) {
    const Edge& e = h.graph().edges()[i];
    const EdgeId image = host.edge_id(embedding.vertex_map[e.u], embedding.vertex_map[e.v]);
    if (image < 0 || image != embedding.image_edges[i]) return false;
    if (!c.coloured(image) || c.at(image) != embedding.colours[i]) return false;
  }
  return embedding.is_rainbow();
}

std::optional<Embedding> find_rainbow_copy(const Graph& g, const EdgeColouring& c, const Pattern& h) {
  require(c.edge_count() == g.edge_count() && c.is_total(), "find_rainbow_copy needs a total colouring");
  std::optional<Embedding> found;
  std::vector<Colour> colours;
  for_each_copy(g, h, [&](const Copy& copy) {
    colours.clear();
    for (EdgeId e : copy.edges) colours.push_back(c.at(e));
    std::sort(colours.begin(), colours.end());
    if (std::adjacent_find(colours.begin(), colours.end()) != colours.end()) return true;
    found = make_embedding(g, c, h, copy.vertex_map);
    return false;
  });
  return found;
}

bool has_rainbow_completion_conflict(const CopyIndex& index, const EdgeColouring& c, EdgeId last_edge) {
  std::vector<Colour> colours;
  for (int id : index.copies_through(last_edge)) {
    colours.clear();
    bool complete = true;
    for (EdgeId e : index.copies()[id].edges) {
      if (!c.coloured(e)) {
        complete = false;
        break;
      }
      colours.push_back(c.at(e));
    }
    if (!complete) continue;
    std::sort(colours.begin(), colours.end());
    if (std::adjacent_find(colours.begin(), colours.end()) == colours.end()) return true;
  }
  return false;
}

namespace {

void check_complete_host(int n, const EdgeColouring& c) {
  require(n >= 1, "n must be positive");
  require(c.edge_count() == n * (n - 1) / 2 && c.is_total(),
          "colouring must be total on the edges of K_n");
}

// Edge id of {a, b} in complete_graph(n).
EdgeId complete_edge(int n, Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

struct PlacementState {
  const Pattern& h;
  int n;
  const EdgeColouring& c;
  std::vector<Vertex> order;
  std::vector<std::vector<Vertex>> back;  // earlier pattern neighbours per position
};

PlacementState make_state(int n, const EdgeColouring& c, const Pattern& h) {
  PlacementState state{h, n, c, h.degeneracy_order().order, {}};
  std::vector<int> position(h.vertex_count());
  for (std::size_t i = 0; i < state.order.size(); ++i) position[state.order[i]] = static_cast<int>(i);
  state.back.resize(state.order.size());
  for (std::size_t i = 0; i < state.order.size(); ++i)
    for (Vertex q : h.graph().neighbours(state.order[i]))
      if (position[q] < static_cast<int>(i)) state.back[i].push_back(q);
  return state;
}

// Host vertices that may take position `depth`: unused, no new edge repeats a
// colour already placed, and the new edges have pairwise distinct colours.
std::vector<Vertex> candidates(const PlacementState& s, int depth, const std::vector<Vertex>& map,
                               const std::vector<bool>& used, const std::multiset<Colour>& placed) {
  std::vector<Vertex> result;
  std::vector<Colour> fresh;
  for (Vertex w = 0; w < s.n; ++w) {
    if (used[w]) continue;
    fresh.clear();
    bool ok = true;
    for (Vertex q : s.back[depth]) {
      const Colour col = s.c.at(complete_edge(s.n, map[q], w));
      if (placed.count(col) || std::find(fresh.begin(), fresh.end(), col) != fresh.end()) {
        ok = false;
        break;
      }
      fresh.push_back(col);
    }
    if (ok) result.push_back(w);
  }
  return result;
}

}  // namespace

Embedding greedy_rainbow_embed(int n, const EdgeColouring& c, const Pattern& h) {
  check_complete_host(n, c);
  const int k = h.degeneracy();
  require(n >= k * h.edge_count() - k + h.vertex_count(),
          "n is below k*e(H) - k + v(H) for this pattern");
  const Graph host = [&] {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    return Graph(n, edges);
  }();
  require(is_proper(host, c), "greedy_rainbow_embed needs a proper colouring");

  const PlacementState state = make_state(n, c, h);
  std::vector<Vertex> map(h.vertex_count(), -1);
  std::vector<bool> used(n, false);
  std::multiset<Colour> placed;
  for (std::size_t depth = 0; depth < state.order.size(); ++depth) {
    const auto options = candidates(state, static_cast<int>(depth), map, used, placed);
    ensure(!options.empty(), "no admissible vertex although n meets the bound");
    const Vertex w = options.front();
    for (Vertex q : state.back[depth]) placed.insert(c.at(complete_edge(n, map[q], w)));
    map[state.order[depth]] = w;
    used[w] = true;
  }
  Embedding result = make_embedding(host, c, h, std::move(map));
  ensure(result.is_rainbow(), "greedy embedding is not rainbow");
  return result;
}

BoundedEmbedResult bounded_rainbow_embed(int n, const EdgeColouring& c, const Pattern& h, int m) {
  check_complete_host(n, c);
  require(m >= 1, "m must be positive");
  const int k = h.degeneracy();
  require(n >= m * k * h.edge_count() - m * k + h.vertex_count(),
          "n is below m*k*e(H) - m*k + v(H) for this pattern");
  const Graph host = [&] {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    return Graph(n, edges);
  }();
  require(is_m_bounded(host, c, m), "colouring repeats a colour more than m times at a vertex");

  const PlacementState state = make_state(n, c, h);
  std::vector<Vertex> map(h.vertex_count(), -1);
  std::vector<bool> used(n, false);
  std::multiset<Colour> placed;
  long backtracks = 0;

  std::function<bool(std::size_t)> place = [&](std::size_t depth) {
    if (depth == state.order.size()) return true;
    const auto options = candidates(state, static_cast<int>(depth), map, used, placed);
    for (Vertex w : options) {
      std::vector<Colour> added;
      for (Vertex q : state.back[depth]) added.push_back(c.at(complete_edge(n, map[q], w)));
      for (Colour col : added) placed.insert(col);
      map[state.order[depth]] = w;
      used[w] = true;
      if (place(depth + 1)) return true;
      ++backtracks;
      used[w] = false;
      map[state.order[depth]] = -1;
      for (Colour col : added) placed.erase(placed.find(col));
    }
    return false;
  };
  ensure(place(0), "no rainbow copy found in an m-bounded colouring meeting the bound");
  if (k <= 1 || m == 1) ensure(backtracks == 0, "greedy step failed where the counting bound applies");

  BoundedEmbedResult result{make_embedding(host, c, h, std::move(map)), backtracks};
  ensure(result.embedding.is_rainbow(), "bounded embedding is not rainbow");
  return result;
}

namespace {

struct TreeParts {
  Vertex x0 = -1, x1 = -1, x2 = -1;
  // Vertices of the x_2 side (z_1..z_t) and x_1 side (y_1..y_s) in BFS order
  // with their tree parents.
  std::vector<std::pair<Vertex, Vertex>> z_side;
  std::vector<std::pair<Vertex, Vertex>> y_side;
};

TreeParts split_tree(const Graph& t) {
  TreeParts parts;
  auto is_leaf = [&](Vertex v) { return t.degree(v) == 1; };
  for (Vertex v = 0; v < t.vertex_count() && parts.x0 < 0; ++v) {
    if (!is_leaf(v)) continue;
    const Vertex parent = t.neighbours(v).front();
    for (Vertex w : t.neighbours(parent))
      if (w != v && !is_leaf(w)) {
        parts.x0 = v;
        parts.x1 = parent;
        break;
      }
  }
  ensure(parts.x0 >= 0, "tree has no leaf next to a non-leaf neighbour");
  for (Vertex w : t.neighbours(parts.x1))
    if (!is_leaf(w) && (parts.x2 < 0 || w < parts.x2)) parts.x2 = w;

  // BFS inside t minus x_0 and minus the edge x_1 x_2.
  auto side = [&](Vertex root, Vertex blocked) {
    std::vector<std::pair<Vertex, Vertex>> order;
    std::vector<bool> seen(t.vertex_count(), false);
    seen[root] = seen[parts.x0] = seen[blocked] = true;
    std::vector<Vertex> queue{root};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      std::vector<Vertex> next(t.neighbours(queue[i]));
      std::sort(next.begin(), next.end());
      for (Vertex y : next)
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
          order.emplace_back(y, queue[i]);
        }
    }
    return order;
  };
  parts.z_side = side(parts.x2, parts.x1);
  parts.y_side = side(parts.x1, parts.x2);
  return parts;
}

}  // namespace

Embedding rainbow_tree_embed(const Graph& g, const EdgeColouring& c, const Pattern& t) {
  const Graph& tree = t.graph();
  require(t.classification() == PatternClass::tree_non_star, "rainbow_tree_embed needs a non-star tree");
  const int k = tree.vertex_count() - 2;
  const StructuralReport report = structural_report(g);
  require(report.regular_of == k, "host must be k-regular with k = v(T) - 2");
  require(report.connected, "host must be connected");
  const auto host_girth = girth(g);
  require(!host_girth || *host_girth >= k + 2, "host girth must be at least k + 2");
  require(is_proper(g, c), "colouring must be proper and total");

  auto palette_at = [&](Vertex v) { return incident_colours(g, c, v); };
  Vertex u1 = -1, u2 = -1;
  for (const Edge& e : g.edges()) {
    const auto a = palette_at(e.u), b = palette_at(e.v);
    if (!std::includes(a.begin(), a.end(), b.begin(), b.end())) {
      u1 = e.u;
      u2 = e.v;
    } else if (!std::includes(b.begin(), b.end(), a.begin(), a.end())) {
      u1 = e.v;
      u2 = e.u;
    }
    if (u1 >= 0) break;
  }
  require(u1 >= 0, "colouring is a k-edge-colouring pattern: no adjacent pair with differing colour sets");

  const TreeParts parts = split_tree(tree);
  std::vector<Vertex> phi(tree.vertex_count(), -1);
  std::vector<bool> used(g.vertex_count(), false);
  std::set<Colour> forbidden;
  auto assign = [&](Vertex x, Vertex image) {
    phi[x] = image;
    used[image] = true;
  };
  assign(parts.x1, u1);
  assign(parts.x2, u2);
  forbidden.insert(c.at(g.edge_id(u1, u2)));

  // z_1: a neighbour of u_2 whose edge colour is missing at u_1.
  const auto at_u1 = palette_at(u1);
  Colour seed_colour = 0;
  {
    const auto& [z1, parent] = parts.z_side.front();
    ensure(parent == parts.x2, "first vertex of the x_2 side must hang off x_2");
    std::vector<Vertex> options(g.neighbours(u2));
    std::sort(options.begin(), options.end());
    for (Vertex w : options) {
      const Colour col = c.at(g.edge_id(u2, w));
      if (!at_u1.count(col)) {
        assign(z1, w);
        seed_colour = col;
        forbidden.insert(col);
        break;
      }
    }
    ensure(phi[z1] >= 0, "no neighbour of u_2 with a colour missing at u_1");
  }

  auto extend = [&](Vertex x, Vertex parent) {
    const Vertex anchor = phi[parent];
    std::vector<Vertex> options(g.neighbours(anchor));
    std::sort(options.begin(), options.end());
    for (Vertex w : options) {
      if (used[w]) continue;
      const Colour col = c.at(g.edge_id(anchor, w));
      if (forbidden.count(col)) continue;
      assign(x, w);
      forbidden.insert(col);
      return;
    }
    throw InvariantViolation("no admissible vertex while extending the tree");
  };
  for (std::size_t i = 1; i < parts.z_side.size(); ++i) extend(parts.z_side[i].first, parts.z_side[i].second);
  for (const auto& [y, parent] : parts.y_side) extend(y, parent);

  // x_0: any unused neighbour of u_1 whose colour differs from every other
  // image edge; it cannot equal the seed colour, which is missing at u_1.
  forbidden.erase(seed_colour);
  {
    std::vector<Vertex> options(g.neighbours(u1));
    std::sort(options.begin(), options.end());
    for (Vertex w : options) {
      if (used[w] || forbidden.count(c.at(g.edge_id(u1, w)))) continue;
      assign(parts.x0, w);
      break;
    }
    ensure(phi[parts.x0] >= 0, "no admissible image for the leaf x_0");
  }

  Embedding result = make_embedding(g, c, t, std::move(phi));
  ensure(is_rainbow_embedding(g, c, t, result), "tree embedding is not a rainbow copy");
  return result;
}

}  // namespace dar
