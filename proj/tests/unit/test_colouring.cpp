#include <doctest.h>

#include "dar/error.hpp"
#include "dar/colouring.hpp"
#include "dar/constructions.hpp"
#include "dar/random.hpp"
#include "dar/testing/oracles.hpp"

using namespace dar;

namespace {
const char* small_hosts[] = {"k4", "c5", "bull", "p5", "k_2_3", "prism", "k33", "k4_subdivided", "chair", "2k2"};
}

TEST_CASE("proper colouring counts agree with set partitions") {
  for (const char* name : small_hosts) {
    const Graph g = named_graph(name);
    for (int q = g.max_degree(); q <= g.max_degree() + 2; ++q) {
      CAPTURE(name);
      CAPTURE(q);
      CHECK(count_proper_colourings(g, {q}) == oracle::proper_partition_count(g, q));
    }
    CHECK(count_proper_colourings(g) == oracle::proper_partition_count(g, g.edge_count()));
  }
}

TEST_CASE("chromatic index agrees with naive search") {
  for (const char* name : {"k4", "c5", "k5", "prism", "k33", "petersen", "bull", "c6"}) {
    CAPTURE(name);
    const Graph g = named_graph(name);
    int q = 1;
    while (!oracle::edge_colourable(g, q)) ++q;
    CHECK(chromatic_index(g) == q);
  }
}

TEST_CASE("one-bounded means proper") {
  std::mt19937_64 rng(7);
  const Graph g = petersen();
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Colour> cs(g.edge_count());
    for (auto& c : cs) c = 1 + static_cast<int>(uniform_below(rng, 4));
    const auto c = EdgeColouring::total(cs);
    CHECK(is_m_bounded(g, c, 1) == is_proper(g, c));
    CHECK(is_proper(g, c) == oracle::is_proper(g, c));
  }
}

TEST_CASE("random bounded colourings respect the bound") {
  std::mt19937_64 rng(11);
  const Graph g = complete_graph(7);
  for (int m = 1; m <= 3; ++m)
    for (int trial = 0; trial < 20; ++trial) {
      const EdgeColouring c = random_bounded_colouring(g, m, 3, rng);
      CHECK(c.is_total());
      CHECK(is_m_bounded(g, c, m));
    }
}

TEST_CASE("canonical enumeration uses first-use colours") {
  const Graph g = cycle_graph(4);
  std::int64_t seen = 0;
  for_each_proper_colouring(g, {}, [&](const EdgeColouring& c) {
    ++seen;
    CHECK(is_proper(g, c));
    return true;
  });
  CHECK(seen == count_proper_colourings(g));
}

TEST_CASE("completion extends a partial colouring") {
  const Graph g = petersen();
  EdgeColouring partial(g.edge_count());
  partial.set(0, 1);
  partial.set(g.edge_count() - 1, 2);
  auto full = complete_to_proper(g, partial, {4, std::nullopt});
  REQUIRE(full.has_value());
  CHECK(is_proper(g, *full));
  CHECK(full->at(0) == 1);
  CHECK(full->max_colour() <= 4);
  CHECK_FALSE(complete_to_proper(g, EdgeColouring(g.edge_count()), {3, std::nullopt}).has_value());
}

TEST_CASE("greedy completion oracle is proper") {
  const Graph g = complete_graph(6);
  const EdgeColouring c = oracle::greedy_completion(g, EdgeColouring(g.edge_count()));
  CHECK(is_proper(g, c));
}
