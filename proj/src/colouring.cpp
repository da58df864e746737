#include "dar/colouring.hpp"

#include <algorithm>
#include <numeric>

#include "dar/error.hpp"
#include "dar/random.hpp"

namespace dar {

EdgeColouring EdgeColouring::total(const std::vector<Colour>& colours) {
  EdgeColouring c(static_cast<int>(colours.size()));
  for (std::size_t e = 0; e < colours.size(); ++e) c.set(static_cast<EdgeId>(e), colours[e]);
  return c;
}

Colour EdgeColouring::at(EdgeId e) const {
  require(colours_[e].has_value(), "edge " + std::to_string(e) + " is uncoloured");
  return *colours_[e];
}

void EdgeColouring::set(EdgeId e, Colour c) {
  require(c >= 1, "colours start at 1");
  colours_[e] = c;
}

bool EdgeColouring::is_total() const {
  return std::all_of(colours_.begin(), colours_.end(), [](const auto& c) { return c.has_value(); });
}

int EdgeColouring::colour_count() const {
  std::set<Colour> seen;
  for (const auto& c : colours_)
    if (c) seen.insert(*c);
  return static_cast<int>(seen.size());
}

Colour EdgeColouring::max_colour() const {
  Colour m = 0;
  for (const auto& c : colours_)
    if (c) m = std::max(m, *c);
  return m;
}

std::set<Colour> incident_colours(const Graph& g, const EdgeColouring& c, Vertex v) {
  std::set<Colour> result;
  for (EdgeId e : g.incident(v))
    if (c.coloured(e)) result.insert(c.at(e));
  return result;
}

bool is_m_bounded(const Graph& g, const EdgeColouring& c, int m) {
  require(c.edge_count() == g.edge_count(), "colouring does not match the graph");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<Colour> seen;
    for (EdgeId e : g.incident(v))
      if (c.coloured(e)) seen.push_back(c.at(e));
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 0, j = 0; i < seen.size(); i = j) {
      while (j < seen.size() && seen[j] == seen[i]) ++j;
      if (static_cast<int>(j - i) > m) return false;
    }
  }
  return true;
}

bool is_proper_partial(const Graph& g, const EdgeColouring& c) { return is_m_bounded(g, c, 1); }

bool is_proper(const Graph& g, const EdgeColouring& c) {
  return c.edge_count() == g.edge_count() && c.is_total() && is_m_bounded(g, c, 1);
}

std::vector<EdgeId> search_edge_order(const Graph& g) {
  std::vector<EdgeId> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  auto weight = [&](EdgeId e) { return g.degree(g.edge(e).u) + g.degree(g.edge(e).v); };
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId a, EdgeId b) { return weight(a) > weight(b); });
  return order;
}

namespace {

// Per-vertex colour occupancy for palettes 1..palette.
class Occupancy {
 public:
  Occupancy(int vertices, int palette)
      : palette_(palette), counts_(static_cast<std::size_t>(vertices) * (palette + 2), 0) {}

  int count(Vertex v, Colour c) const { return counts_[index(v, c)]; }
  bool free(const Edge& e, Colour c) const { return count(e.u, c) == 0 && count(e.v, c) == 0; }
  void add(const Edge& e, Colour c) {
    ++counts_[index(e.u, c)];
    ++counts_[index(e.v, c)];
  }
  void remove(const Edge& e, Colour c) {
    --counts_[index(e.u, c)];
    --counts_[index(e.v, c)];
  }

 private:
  std::size_t index(Vertex v, Colour c) const { return static_cast<std::size_t>(v) * (palette_ + 2) + c; }
  int palette_;
  std::vector<int> counts_;
};

}  // namespace

std::optional<EdgeColouring> find_edge_colouring(const Graph& g, int colours) {
  const int m = g.edge_count();
  if (m == 0) return EdgeColouring(0);
  if (colours < g.max_degree()) return std::nullopt;
  const std::vector<EdgeId> order = search_edge_order(g);
  Occupancy occupancy(g.vertex_count(), colours);
  std::vector<Colour> assigned(m, 0);

  auto has_option = [&](EdgeId e) {
    const Edge& edge = g.edge(e);
    for (Colour c = 1; c <= colours; ++c)
      if (occupancy.free(edge, c)) return true;
    return false;
  };
  auto neighbours_viable = [&](const Edge& edge) {
    for (Vertex x : {edge.u, edge.v})
      for (EdgeId f : g.incident(x))
        if (assigned[f] == 0 && !has_option(f)) return false;
    return true;
  };

  std::function<bool(int, Colour)> extend = [&](int depth, Colour max_used) {
    if (depth == m) return true;
    const EdgeId e = order[depth];
    const Edge& edge = g.edge(e);
    const Colour top = std::min(colours, max_used + 1);
    for (Colour c = 1; c <= top; ++c) {
      if (!occupancy.free(edge, c)) continue;
      occupancy.add(edge, c);
      assigned[e] = c;
      if (neighbours_viable(edge) && extend(depth + 1, std::max(max_used, c))) return true;
      assigned[e] = 0;
      occupancy.remove(edge, c);
    }
    return false;
  };
  if (!extend(0, 0)) return std::nullopt;
  return EdgeColouring::total(assigned);
}

int chromatic_index(const Graph& g) {
  require(g.edge_count() >= 1, "chromatic index needs at least one edge");
  const int delta = g.max_degree();
  const int result = find_edge_colouring(g, delta) ? delta : delta + 1;
  ensure(find_edge_colouring(g, result).has_value(), "no (Delta+1)-edge-colouring found");
  return result;
}

void for_each_proper_colouring(const Graph& g, const EnumerationOptions& options,
                               const std::function<bool(const EdgeColouring&)>& visit) {
  const int m = g.edge_count();
  const int palette = options.max_colours.value_or(m);
  const std::vector<EdgeId> order = search_edge_order(g);
  Occupancy occupancy(g.vertex_count(), std::max(palette, 1));
  EdgeColouring current(m);
  bool stop = false;

  std::function<void(int, Colour)> extend = [&](int depth, Colour max_used) {
    if (stop) return;
    if (depth == m) {
      if (!visit(current)) stop = true;
      return;
    }
    const EdgeId e = order[depth];
    const Edge& edge = g.edge(e);
    const Colour top = std::min(palette, max_used + 1);
    for (Colour c = 1; c <= top && !stop; ++c) {
      if (!occupancy.free(edge, c)) continue;
      occupancy.add(edge, c);
      current.set(e, c);
      extend(depth + 1, std::max(max_used, c));
      current.clear(e);
      occupancy.remove(edge, c);
    }
  };
  extend(0, 0);
}

std::int64_t count_proper_colourings(const Graph& g, const EnumerationOptions& options) {
  std::int64_t count = 0;
  for_each_proper_colouring(g, options, [&](const EdgeColouring&) {
    ++count;
    return true;
  });
  return count;
}

std::optional<EdgeColouring> complete_to_proper(const Graph& g, const EdgeColouring& partial,
                                                const CompletionOptions& options) {
  require(partial.edge_count() == g.edge_count(), "colouring does not match the graph");
  require(is_proper_partial(g, partial), "partial colouring is not proper on its domain");

  std::optional<std::mt19937_64> rng;
  if (options.seed) rng.emplace(*options.seed);

  std::vector<EdgeId> open;
  for (EdgeId e : search_edge_order(g))
    if (!partial.coloured(e)) open.push_back(e);
  if (rng) shuffle(open, *rng);

  const Colour existing = partial.max_colour();
  const bool bounded = options.max_colours.has_value();
  if (bounded && existing > *options.max_colours) return std::nullopt;
  const int palette = bounded ? *options.max_colours : std::max(existing, g.max_degree() + 1);
  // Unbounded completion may spill past the palette by one fresh colour per edge.
  const int capacity = bounded ? palette : palette + static_cast<int>(open.size());

  Occupancy occupancy(g.vertex_count(), capacity);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (partial.coloured(e)) occupancy.add(g.edge(e), partial.at(e));

  EdgeColouring result = partial;
  Colour fresh = palette;
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == open.size()) return true;
    const EdgeId e = open[depth];
    const Edge& edge = g.edge(e);
    std::vector<Colour> candidates(palette);
    std::iota(candidates.begin(), candidates.end(), 1);
    if (rng) shuffle(candidates, *rng);
    for (Colour c : candidates) {
      if (!occupancy.free(edge, c)) continue;
      occupancy.add(edge, c);
      result.set(e, c);
      if (extend(depth + 1)) return true;
      result.clear(e);
      occupancy.remove(edge, c);
    }
    if (!bounded) {
      const Colour c = ++fresh;
      occupancy.add(edge, c);
      result.set(e, c);
      if (extend(depth + 1)) return true;
      result.clear(e);
      occupancy.remove(edge, c);
      --fresh;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return result;
}

EdgeColouring random_bounded_colouring(const Graph& g, int m, int palette, std::mt19937_64& rng) {
  require(m >= 1 && palette >= 1, "need m >= 1 and a non-empty palette");
  std::vector<EdgeId> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  shuffle(order, rng);

  const int capacity = palette + g.edge_count();
  Occupancy occupancy(g.vertex_count(), capacity);
  EdgeColouring result(g.edge_count());
  std::vector<Colour> admissible;
  for (EdgeId e : order) {
    const Edge& edge = g.edge(e);
    auto fits = [&](Colour c) { return occupancy.count(edge.u, c) < m && occupancy.count(edge.v, c) < m; };
    admissible.clear();
    for (Colour c = 1; c <= palette; ++c)
      if (fits(c)) admissible.push_back(c);
    Colour chosen;
    if (!admissible.empty()) {
      chosen = admissible[uniform_below(rng, admissible.size())];
    } else {
      chosen = palette + 1;
      while (!fits(chosen)) ++chosen;
    }
    occupancy.add(edge, chosen);
    result.set(e, chosen);
  }
  return result;
}

}  // namespace dar
