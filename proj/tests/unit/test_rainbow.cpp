#include <doctest.h>

#include "dar/error.hpp"
#include "dar/colouring.hpp"
#include "dar/constructions.hpp"
#include "dar/rainbow.hpp"
#include "dar/random.hpp"
#include "dar/testing/oracles.hpp"

using namespace dar;

TEST_CASE("rainbow copy search agrees with brute force") {
  std::mt19937_64 rng(13);
  for (const char* host : {"k5", "petersen", "k33", "prism"})
    for (const char* pattern : {"c4", "p4", "bull", "2k2", "c5"}) {
      CAPTURE(host);
      CAPTURE(pattern);
      const Graph g = named_graph(host);
      const Pattern h(named_graph(pattern));
      for (int trial = 0; trial < 10; ++trial) {
        const EdgeColouring c = random_proper_colouring(g, g.max_degree() + 1, rng);
        const auto e = find_rainbow_copy(g, c, h);
        CHECK(e.has_value() == oracle::has_rainbow_copy(g, c, h.graph()));
        if (e) CHECK(is_rainbow_embedding(g, c, h, *e));
      }
    }
}

TEST_CASE("greedy embedding in a large enough complete graph") {
  std::mt19937_64 rng(17);
  for (const char* pattern : {"c4", "p5", "bull", "k4", "c6", "2k2"}) {
    CAPTURE(pattern);
    const Pattern h(named_graph(pattern));
    const int k = h.degeneracy();
    const int n = k * h.edge_count() - k + h.vertex_count();
    const Graph kn = complete_graph(n);
    for (int trial = 0; trial < 5; ++trial) {
      const EdgeColouring c = random_proper_colouring(kn, n + 2, rng);
      const Embedding e = greedy_rainbow_embed(n, c, h);
      CHECK(is_rainbow_embedding(kn, c, h, e));
    }
  }
}

TEST_CASE("greedy embedding rejects an improper colouring") {
  const Pattern h(cycle_graph(4));
  const Graph kn = complete_graph(10);
  CHECK_THROWS_AS(greedy_rainbow_embed(10, EdgeColouring::total(std::vector<Colour>(kn.edge_count(), 1)), h),
                  InvalidInput);
  CHECK_THROWS_AS(greedy_rainbow_embed(5, EdgeColouring(10), h), InvalidInput);
}

TEST_CASE("bounded embedding") {
  std::mt19937_64 rng(19);
  for (int m = 1; m <= 2; ++m)
    for (const char* pattern : {"c4", "p4", "star_3"}) {
      CAPTURE(m);
      CAPTURE(pattern);
      const Pattern h(named_graph(pattern));
      const int k = h.degeneracy();
      const int n = m * k * h.edge_count() - m * k + h.vertex_count();
      const Graph kn = complete_graph(n);
      const EdgeColouring c = random_bounded_colouring(kn, m, n, rng);
      const auto r = bounded_rainbow_embed(n, c, h, m);
      CHECK(is_rainbow_embedding(kn, c, h, r.embedding));
      if (m == 1 || k == 1) CHECK(r.backtracks == 0);
    }
}

TEST_CASE("tree embedding in class-two regular hosts") {
  std::mt19937_64 rng(23);
  struct Case {
    int k;
    const char* tree;
  };
  for (const Case cs : {Case{2, "p4"}, Case{3, "p5"}, Case{3, "chair"}}) {
    CAPTURE(cs.tree);
    const Graph g = class2_regular(cs.k);
    const Pattern t(named_graph(cs.tree));
    for (int trial = 0; trial < 20; ++trial) {
      const EdgeColouring c = random_proper_colouring(g, cs.k + 2, rng);
      const Embedding e = rainbow_tree_embed(g, c, t);
      CHECK(is_rainbow_embedding(g, c, t, e));
    }
  }
}

TEST_CASE("tree embedding refuses stars") {
  const Graph g = class2_regular(3);
  std::mt19937_64 rng(1);
  const EdgeColouring c = random_proper_colouring(g, 4, rng);
  CHECK_THROWS_AS(rainbow_tree_embed(g, c, Pattern(named_graph("star_4"))), InvalidInput);
}

TEST_CASE("completion conflicts are detected on the last edge") {
  const Graph g = cycle_graph(4);
  const CopyIndex index(g, Pattern(cycle_graph(4)));
  EdgeColouring c(4);
  c.set(0, 1);
  c.set(1, 2);
  c.set(2, 3);
  CHECK_FALSE(has_rainbow_completion_conflict(index, c, 2));
  c.set(3, 4);
  CHECK(has_rainbow_completion_conflict(index, c, 3));
  c.set(3, 1);
  CHECK_FALSE(has_rainbow_completion_conflict(index, c, 3));
}
