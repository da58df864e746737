#include "dar/lp.hpp"

#include "dar/error.hpp"

namespace dar {

namespace {

void check_matrix(const std::vector<std::vector<int>>& a) {
  const std::size_t n = a.size();
  require(n >= 1, "covering LP needs at least one constraint");
  for (std::size_t i = 0; i < n; ++i) {
    require(a[i].size() == n, "covering matrix must be square");
    require(a[i][i] >= 1, "covering matrix needs a positive diagonal");
    for (std::size_t j = 0; j < n; ++j) {
      require(a[i][j] >= 0, "covering matrix must be non-negative");
      require(a[i][j] == a[j][i], "covering matrix must be symmetric");
    }
  }
}

}  // namespace

bool verify_covering(const std::vector<std::vector<int>>& a, const CoveringSolution& s) {
  const std::size_t n = a.size();
  if (s.primal.size() != n || s.dual.size() != n) return false;
  Rational primal_sum = 0, dual_sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (s.primal[i] < 0 || s.dual[i] < 0) return false;
    Rational cover = 0, pack = 0;
    for (std::size_t j = 0; j < n; ++j) {
      cover += a[i][j] * s.primal[j];
      pack += a[i][j] * s.dual[j];
    }
    if (cover < 1 || pack > 1) return false;
    primal_sum += s.primal[i];
    dual_sum += s.dual[i];
  }
  return primal_sum == s.value && dual_sum == s.value;
}

CoveringSolution solve_symmetric_covering(const std::vector<std::vector<int>>& a) {
  check_matrix(a);
  const int n = static_cast<int>(a.size());
  const int cols = 2 * n;  // y_0..y_{n-1}, then slacks s_0..s_{n-1}

  // Tableau rows: constraint i reads sum_j t[i][j] x_j = rhs[i], basic var basis[i].
  std::vector<std::vector<Rational>> t(n, std::vector<Rational>(cols, 0));
  std::vector<Rational> rhs(n, 1);
  std::vector<int> basis(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    basis[i] = n + i;
  }
  // Reduced costs for max 1'y.
  std::vector<Rational> reduced(cols, 0);
  for (int j = 0; j < n; ++j) reduced[j] = 1;
  Rational objective = 0;

  int pivots = 0;
  for (;;) {
    int entering = -1;
    for (int j = 0; j < cols && entering < 0; ++j)
      if (reduced[j] > 0) entering = j;
    if (entering < 0) break;

    int leaving = -1;
    Rational best;
    for (int i = 0; i < n; ++i) {
      if (t[i][entering] <= 0) continue;
      const Rational ratio = rhs[i] / t[i][entering];
      if (leaving < 0 || ratio < best || (ratio == best && basis[i] < basis[leaving])) {
        leaving = i;
        best = ratio;
      }
    }
    // The packing side is bounded: every y_j is at most 1 / a_jj.
    ensure(leaving >= 0, "packing LP reported unbounded");

    const Rational pivot = t[leaving][entering];
    for (int j = 0; j < cols; ++j) t[leaving][j] /= pivot;
    rhs[leaving] /= pivot;
    for (int i = 0; i < n; ++i) {
      if (i == leaving || t[i][entering] == 0) continue;
      const Rational factor = t[i][entering];
      for (int j = 0; j < cols; ++j) t[i][j] -= factor * t[leaving][j];
      rhs[i] -= factor * rhs[leaving];
    }
    const Rational factor = reduced[entering];
    for (int j = 0; j < cols; ++j) reduced[j] -= factor * t[leaving][j];
    objective += factor * rhs[leaving];
    basis[leaving] = entering;
    ++pivots;
  }

  CoveringSolution s;
  s.value = objective;
  s.pivots = pivots;
  s.dual.assign(n, 0);
  for (int i = 0; i < n; ++i)
    if (basis[i] < n) s.dual[basis[i]] = rhs[i];
  s.primal.resize(n);
  for (int i = 0; i < n; ++i) s.primal[i] = -reduced[n + i];
  ensure(verify_covering(a, s), "simplex optimum failed the duality audit");
  return s;
}

}  // namespace dar
