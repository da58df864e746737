#include "dar/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

#include "dar/error.hpp"
#include "dar/pattern.hpp"
#include "dar/random.hpp"

namespace dar {

int Gadget::hub_count() const { return cycle_length % 2 == 0 ? cycle_length / 2 : (cycle_length + 1) / 2; }
int Gadget::parallel_rows() const { return cycle_length % 2 == 0 ? cycle_length / 2 : (cycle_length - 1) / 2; }
Vertex Gadget::hub(int i) const { return i - 1; }
Vertex Gadget::parallel(int i, int j) const { return hub_count() + (i - 1) * multiplicity + (j - 1); }
EdgeId Gadget::into_parallel(int i, int j) const { return 2 * ((i - 1) * multiplicity + (j - 1)); }
EdgeId Gadget::out_of_parallel(int i, int j) const { return into_parallel(i, j) + 1; }
EdgeId Gadget::closing_edge() const {
  return cycle_length % 2 == 0 ? -1 : 2 * parallel_rows() * multiplicity;
}

Gadget make_gadget(int cycle_length, int multiplicity) {
  require(cycle_length >= 3, "gadget cycle length must be at least 3");
  require(multiplicity >= 1, "gadget multiplicity must be at least 1");
  Gadget gadget;
  gadget.cycle_length = cycle_length;
  gadget.multiplicity = multiplicity;
  const int hubs = gadget.hub_count();
  const int rows = gadget.parallel_rows();
  const bool even = cycle_length % 2 == 0;
  const int n = hubs + rows * multiplicity;

  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::string> labels(n);
  for (int i = 1; i <= hubs; ++i) labels[gadget.hub(i)] = "u" + std::to_string(i);
  for (int i = 1; i <= rows; ++i) {
    const int next = even ? (i % hubs) + 1 : i + 1;
    for (int j = 1; j <= multiplicity; ++j) {
      const Vertex v = gadget.parallel(i, j);
      labels[v] = "v" + std::to_string(i) + "," + std::to_string(j);
      edges.emplace_back(gadget.hub(i), v);
      edges.emplace_back(v, gadget.hub(next));
    }
  }
  if (!even) edges.emplace_back(gadget.hub(hubs), gadget.hub(1));
  gadget.graph = Graph(n, edges).with_labels(std::move(labels));
  return gadget;
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycles need at least 3 vertices");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  require(n >= 2, "paths need at least 2 vertices");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graphs need at least one vertex");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return Graph(n, edges);
}

Graph complete_bipartite(int s, int t) {
  require(s >= 1 && t >= 1, "complete bipartite parts must be non-empty");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < t; ++b) edges.emplace_back(a, s + b);
  return Graph(s + t, edges);
}

Graph petersen() {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i) edges.emplace_back(i, i + 5);
  for (int i = 0; i < 5; ++i) edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  return Graph(10, edges);
}

namespace {

Graph star_graph(int leaves) {
  require(leaves >= 1, "stars need at least one edge");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

Graph matching_graph(int size) {
  require(size >= 1, "matchings need at least one edge");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < size; ++i) edges.emplace_back(2 * i, 2 * i + 1);
  return Graph(2 * size, edges);
}

}  // namespace

Graph class2_regular(int k) {
  require(k == 2 || k == 3, "class2_regular supports k in {2, 3} only");
  if (k == 2) return cycle_graph(5);

  const Graph base = petersen();
  const Edge removed = base.edge(0);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int copy = 0; copy < 2; ++copy)
    for (EdgeId e = 1; e < base.edge_count(); ++e)
      edges.emplace_back(base.edge(e).u + 10 * copy, base.edge(e).v + 10 * copy);
  const Vertex u = 20, v = 21;
  edges.emplace_back(u, v);
  edges.emplace_back(u, removed.u);
  edges.emplace_back(u, removed.v);
  edges.emplace_back(v, removed.u + 10);
  edges.emplace_back(v, removed.v + 10);
  std::vector<std::string> labels(22);
  for (int i = 0; i < 20; ++i) labels[i] = "h" + std::to_string(i / 10 + 1) + "." + std::to_string(i % 10);
  labels[u] = "u";
  labels[v] = "v";
  return Graph(22, edges).with_labels(std::move(labels));
}

Graph nonmono_gadget() {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < 8; ++i) edges.emplace_back(i, (i + 1) % 8);
  for (int i = 0; i < 4; ++i) edges.emplace_back(2 * i, 8);
  edges.emplace_back(0, 4);
  edges.emplace_back(2, 6);
  std::vector<std::string> labels;
  for (int i = 0; i < 8; ++i) labels.push_back("v" + std::to_string(i));
  labels.push_back("w");
  return Graph(9, edges).with_labels(std::move(labels));
}

ColouredGraph z3_coloured_bipartite(int r) {
  require(r >= 1, "r must be positive");
  require(r <= 4, "r above 4 is beyond desk scale");
  int size = 1;
  for (int i = 0; i < r; ++i) size *= 3;

  auto difference = [&](int a, int b) {
    int value = 0, place = 1;
    for (int i = 0; i < r; ++i) {
      const int digit = ((a % 3) - (b % 3) + 3) % 3;
      value += digit * place;
      place *= 3;
      a /= 3;
      b /= 3;
    }
    return value;
  };

  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Colour> colours;
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      edges.emplace_back(a, size + b);
      colours.push_back(difference(a, b) + 1);
    }
  return ColouredGraph{Graph(2 * size, edges), EdgeColouring::total(colours)};
}

PartialGadgetColouring lower_bound_partial_colouring(int r) {
  require(r >= 2, "lower_bound_partial_colouring needs r >= 2");
  PartialGadgetColouring result{make_gadget(4 * r, 3 * (r - 1)), EdgeColouring()};
  const Gadget& g = result.gadget;
  result.colouring = EdgeColouring(g.graph.edge_count());
  for (int i = 2; i <= 2 * r; i += 2)
    for (int j = 1; j <= g.multiplicity; ++j) {
      result.colouring.set(g.into_parallel(i, j), j);
      result.colouring.set(g.out_of_parallel(i, j), j % 3 != 0 ? j + 1 : j - 2);
    }
  return result;
}

namespace {

Graph named_single(const std::string& name) {
  static const std::regex sized(R"(^(c|p|star|matching|k|class2)_?(\d+)$)");
  static const std::regex bipartite(R"(^k_(\d+)_(\d+)$)");
  static const std::regex gadget_name(R"(^gadget_?(\d+)[_,](\d+)$)");
  std::smatch m;

  if (name == "petersen") return petersen();
  if (name == "prism") {
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  }
  if (name == "k4_subdivided") {
    return Graph(5, {{0, 4}, {4, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  }
  if (name == "bull") return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 4}});
  if (name == "triangle_pendant") return Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  if (name == "chair") return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}});
  if (name == "2k2") return matching_graph(2);
  if (name == "nonmono") return nonmono_gadget();

  if (std::regex_match(name, m, bipartite)) return complete_bipartite(std::stoi(m[1]), std::stoi(m[2]));
  if (std::regex_match(name, m, gadget_name)) return gadget(std::stoi(m[1]), std::stoi(m[2]));
  if (std::regex_match(name, m, sized)) {
    const std::string kind = m[1];
    const std::string digits = m[2];
    const int n = std::stoi(digits);
    if (kind == "c") return cycle_graph(n);
    if (kind == "p") return path_graph(n);
    if (kind == "star") return star_graph(n);
    if (kind == "matching") return matching_graph(n);
    if (kind == "class2") return class2_regular(n);
    // kST with two non-zero digits and no underscore is K_{S,T}; otherwise K_N.
    if (name.size() == 3 && digits.size() == 2 && digits[0] != '0' && digits[1] != '0')
      return complete_bipartite(digits[0] - '0', digits[1] - '0');
    return complete_graph(n);
  }
  throw InvalidInput("unknown graph name: " + name);
}

}  // namespace

Graph named_graph(const std::string& name) {
  std::string lowered = name;
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  std::stringstream parts(lowered);
  std::string part;
  std::optional<Graph> result;
  while (std::getline(parts, part, '+')) {
    require(!part.empty(), "empty component in graph name: " + name);
    Graph piece = named_single(part);
    result = result ? disjoint_union(*result, piece) : piece;
  }
  require(result.has_value(), "empty graph name");
  return *result;
}

std::int64_t binomial(int n, int k) {
  require(n >= 0 && k >= 0 && k <= n, "binomial needs 0 <= k <= n");
  std::int64_t value = 1;
  for (int i = 1; i <= k; ++i) value = value * (n - k + i) / i;
  return value;
}

namespace {

// f with vertex `from` identified into vertex `into`, renumbered compactly.
Graph identify(const Graph& f, Vertex from, Vertex into) {
  std::vector<Vertex> renumber(f.vertex_count(), -1);
  int next = 0;
  for (Vertex x = 0; x < f.vertex_count(); ++x)
    if (x != from) renumber[x] = next++;
  renumber[from] = renumber[into];
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const Edge& e : f.edges()) edges.emplace_back(renumber[e.u], renumber[e.v]);
  return Graph(next, edges);
}

}  // namespace

Graph forest_host(const Graph& f) {
  require(is_forest(f), "forest_host needs a forest");
  for (Vertex v = 0; v < f.vertex_count(); ++v)
    require(f.degree(v) > 0, "forest_host needs a forest without isolated vertices");
  const PatternClass kind = classify(f);
  require(kind != PatternClass::star, "stars have no host of maximum degree e(F) - 1");
  require(!(kind == PatternClass::matching && f.edge_count() == 2),
          "the two-edge matching has no host of maximum degree e(F) - 1");
  // Gluing keeps the edge count, so the final tree has e(f) + 1 vertices and
  // needs class2_regular(e(f) - 1).
  require(f.edge_count() <= 4, "forest_host supports forests with at most 4 edges");

  const auto comps = components(f);
  if (comps.size() == 1) return class2_regular(f.vertex_count() - 2);

  auto edges_in = [&](const std::vector<Vertex>& comp) {
    int degree_sum = 0;
    for (Vertex v : comp) degree_sum += f.degree(v);
    return degree_sum / 2;
  };
  std::size_t tree = 0;
  for (std::size_t i = 1; i < comps.size(); ++i)
    if (edges_in(comps[i]) < edges_in(comps[tree])) tree = i;
  const int a = edges_in(comps[tree]);
  const int b = f.edge_count() - a;

  std::vector<Vertex> rest;
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (i != tree) rest.insert(rest.end(), comps[i].begin(), comps[i].end());

  for (Vertex t : comps[tree]) {
    for (Vertex r : rest) {
      Graph glued = identify(f, t, r);
      const PatternClass glued_kind = classify(glued);
      if (glued_kind == PatternClass::star) continue;
      if (glued_kind == PatternClass::matching && glued.edge_count() == 2) continue;
      const Graph inner = forest_host(glued);
      return disjoint_copies(inner, static_cast<int>(binomial(a + b, a) + 1));
    }
  }
  throw InvariantViolation("no non-star identification exists");
}

Graph random_bridgeless_cubic(int n, std::mt19937_64& rng) {
  require(n >= 4 && n % 2 == 0, "cubic graphs need an even number of vertices >= 4");
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  shuffle(order, rng);

  std::set<std::pair<Vertex, Vertex>> edges;
  auto key = [](Vertex a, Vertex b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  for (int i = 0; i < n; ++i) edges.insert(key(order[i], order[(i + 1) % n]));

  for (;;) {
    std::vector<Vertex> pairing(n);
    std::iota(pairing.begin(), pairing.end(), 0);
    shuffle(pairing, rng);
    bool clash = false;
    for (int i = 0; i < n && !clash; i += 2) clash = edges.count(key(pairing[i], pairing[i + 1])) > 0;
    if (clash) continue;
    for (int i = 0; i < n; i += 2) edges.insert(key(pairing[i], pairing[i + 1]));
    break;
  }

  auto build = [&](const std::set<std::pair<Vertex, Vertex>>& list) {
    std::vector<std::pair<Vertex, Vertex>> as_vector(list.begin(), list.end());
    return Graph(n, as_vector);
  };
  auto acceptable = [&](const Graph& g) {
    const StructuralReport report = structural_report(g);
    return report.connected && report.bridges.empty();
  };

  for (int attempt = 0; attempt < 4 * n; ++attempt) {
    std::vector<std::pair<Vertex, Vertex>> list(edges.begin(), edges.end());
    auto [a, b] = list[uniform_below(rng, list.size())];
    auto [c, d] = list[uniform_below(rng, list.size())];
    if (a == c || a == d || b == c || b == d) continue;
    if (uniform_below(rng, 2) == 1) std::swap(c, d);
    if (edges.count(key(a, c)) || edges.count(key(b, d))) continue;
    auto candidate = edges;
    candidate.erase(key(a, b));
    candidate.erase(key(c, d));
    candidate.insert(key(a, c));
    candidate.insert(key(b, d));
    if (acceptable(build(candidate))) edges = std::move(candidate);
  }
  return build(edges);
}

}  // namespace dar
