#include <doctest.h>

#include "dar/error.hpp"
#include "dar/lp.hpp"
#include "dar/random.hpp"
#include "dar/testing/oracles.hpp"

using namespace dar;

TEST_CASE("single set of size s has width 1/s") {
  for (int s = 1; s <= 5; ++s) {
    const auto sol = solve_symmetric_covering({{s}});
    CHECK(sol.value == Rational(1, s));
  }
}

TEST_CASE("disjoint sets add up") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 3;
    CHECK(solve_symmetric_covering(a).value == Rational(n, 3));
  }
}

TEST_CASE("two overlapping pairs give two thirds") {
  const auto sol = solve_symmetric_covering({{2, 1}, {1, 2}});
  CHECK(sol.value == Rational(2, 3));
  CHECK(sol.primal == std::vector<Rational>{Rational(1, 3), Rational(1, 3)});
  CHECK(verify_covering({{2, 1}, {1, 2}}, sol));
}

TEST_CASE("random symmetric matrices agree with basis enumeration") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 6));
    std::vector<std::vector<int>> a(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
      a[i][i] = 1 + static_cast<int>(uniform_below(rng, 3));
      for (int j = i + 1; j < n; ++j) a[i][j] = a[j][i] = static_cast<int>(uniform_below(rng, 3));
    }
    const auto sol = solve_symmetric_covering(a);
    CHECK(sol.value == oracle::covering_optimum(a));
    CHECK(verify_covering(a, sol));
  }
}

TEST_CASE("tampered solutions fail verification") {
  const std::vector<std::vector<int>> a{{2, 1}, {1, 2}};
  auto sol = solve_symmetric_covering(a);
  sol.primal[0] = 0;
  CHECK_FALSE(verify_covering(a, sol));
}

TEST_CASE("covering input is validated") {
  CHECK_THROWS_AS(solve_symmetric_covering({{1, 2}, {0, 1}}), InvalidInput);
  CHECK_THROWS_AS(solve_symmetric_covering({{0}}), InvalidInput);
  CHECK_THROWS_AS(solve_symmetric_covering({{1, -1}, {-1, 1}}), InvalidInput);
}
