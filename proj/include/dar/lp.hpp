#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace dar {

using Rational = boost::multiprecision::cpp_rational;

/// Optimum of min 1'x s.t. Ax >= 1, x >= 0 for a symmetric non-negative
/// integer matrix A with positive diagonal, together with the dual optimum
/// y (max 1'y s.t. Ay <= 1, y >= 0) that proves it.
struct CoveringSolution {
  Rational value;
  std::vector<Rational> primal;  // x
  std::vector<Rational> dual;    // y
  int pivots = 0;
};

/// Exact simplex with Bland's rule on the packing side, started from the
/// slack basis (b = 1 is feasible there). The primal optimum is read off the
/// slack reduced costs. Both solutions are checked for feasibility and equal
/// objective before returning; a failed check throws InvariantViolation.
CoveringSolution solve_symmetric_covering(const std::vector<std::vector<int>>& a);

/// Re-checks a solution against A: both feasible, objectives equal to value.
bool verify_covering(const std::vector<std::vector<int>>& a, const CoveringSolution& s);

}  // namespace dar
