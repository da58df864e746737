#include <doctest.h>

#include "dar/error.hpp"
#include "dar/constructions.hpp"
#include "dar/graph.hpp"
#include "dar/testing/acceptance.hpp"
#include "dar/testing/oracles.hpp"

using namespace dar;

TEST_CASE("girth agrees with cycle enumeration") {
  for (const auto& [name, g] : testing::small_corpus()) {
    CAPTURE(name);
    CHECK(girth(g) == oracle::girth(g));
  }
}

TEST_CASE("girth of standard graphs") {
  CHECK(girth(petersen()) == 5);
  CHECK(girth(complete_bipartite(3, 3)) == 4);
  CHECK(girth(cycle_graph(7)) == 7);
  CHECK_FALSE(girth(path_graph(6)).has_value());
}

TEST_CASE("degeneracy ordering respects its value") {
  for (const auto& [name, g] : testing::small_corpus()) {
    CAPTURE(name);
    const Degeneracy d = degeneracy(g);
    CHECK(d.ordering.max_back_degree() == d.value);
    CHECK(static_cast<int>(d.ordering.order.size()) == g.vertex_count());
  }
  CHECK(degeneracy(complete_graph(5)).value == 4);
  CHECK(degeneracy(petersen()).value == 3);
  CHECK(degeneracy(path_graph(5)).value == 1);
}

TEST_CASE("bridges and cut vertices of a path") {
  const StructuralReport r = structural_report(path_graph(4));
  CHECK(r.connected);
  CHECK(r.bridges.size() == 3);
  CHECK(r.cut_vertices == std::vector<Vertex>{1, 2});
  CHECK_FALSE(r.regular_of.has_value());
}

TEST_CASE("structural report of a regular graph") {
  const StructuralReport r = structural_report(petersen());
  CHECK(r.regular_of == 3);
  CHECK(r.bridges.empty());
  CHECK(r.components == 1);
}

TEST_CASE("disjoint union shifts the second graph") {
  const Graph u = disjoint_union(cycle_graph(3), path_graph(2));
  CHECK(u.vertex_count() == 5);
  CHECK(u.edge_count() == 4);
  CHECK(u.adjacent(3, 4));
  CHECK(components(u).size() == 2);
  CHECK(is_forest(path_graph(2)));
  CHECK_FALSE(is_forest(u));
}

TEST_CASE("edge ids follow insertion order") {
  const Graph g(4, {{2, 3}, {0, 1}, {1, 2}});
  CHECK(g.edge_id(3, 2) == 0);
  CHECK(g.edge_id(0, 1) == 1);
  CHECK(g.edge_id(0, 3) == -1);
  CHECK(g.edge(0) == Edge{2, 3});
}

TEST_CASE("malformed graphs are rejected") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidInput);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidInput);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidInput);
}
