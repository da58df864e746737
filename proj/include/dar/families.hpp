#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dar/colouring.hpp"
#include "dar/constructions.hpp"
#include "dar/lp.hpp"
#include "dar/rainbow.hpp"

namespace dar {

/// Universe element: vertices and colours live side by side, tagged so the
/// same integer never means both.
struct Element {
  enum class Kind { vertex, colour };
  Kind kind = Kind::vertex;
  int id = 0;

  static Element vertex(int v) { return {Kind::vertex, v}; }
  static Element colour(int c) { return {Kind::colour, c}; }

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

/// "v3" or "c5".
std::string to_string(const Element& e);
/// Inverse of to_string; a bare integer is read as a vertex.
Element parse_element(const std::string& text);

struct SetFamily {
  std::vector<Element> universe;           // sorted, distinct
  std::vector<std::vector<Element>> sets;  // each sorted, distinct
  std::vector<std::vector<int>> groups;    // optional partition of set indices

  /// Sorts and checks the invariants: sets inside the universe, groups a
  /// partition of 0..sets-1 when present. Throws InvalidInput otherwise.
  void normalise();
  SetFamily subfamily(const std::vector<int>& group_ids) const;  // union of the listed groups
};

/// |E ∩ F| for every pair of sets.
std::vector<std::vector<int>> overlap_matrix(const SetFamily& f);

/// min sum of lambda(E) subject to sum_E |E ∩ F| lambda(E) >= 1 for all F.
Rational fractional_width(const SetFamily& f);
CoveringSolution fractional_width_solution(const SetFamily& f);

/// Families of a proper colouring of G_{2k,d}: group i holds, for each j, the
/// triple {c(u_i v_{i,j}), v_{i,j}, c(v_{i,j} u_{i+1})} (indices mod k).
SetFamily build_gadget_families(int k, int d, const EdgeColouring& c);

struct WidthCriterionReport {
  bool holds = true;
  // One entry per non-empty I (bit i-1 set for group i), in increasing mask order.
  std::vector<std::pair<unsigned, Rational>> widths;
};

/// w*(union of groups in I) > |I| - 1 for every non-empty I ⊆ [k].
WidthCriterionReport width_criterion(int k, int d, const EdgeColouring& c);
bool width_criterion_check(int k, int d, const EdgeColouring& c);

/// Pairwise disjoint sets, one per group, found by backtracking in group
/// order with sets tried in list order. Returns the chosen set indices.
std::optional<std::vector<int>> disjoint_representatives(const SetFamily& f);

/// The 2k-cycle u_1 v_{1,j_1} u_2 ... v_{k,j_k} u_1 read off a system of
/// disjoint representatives of build_gadget_families(k, d, c). The embedding
/// is of C_{2k} with pattern vertex 2(i-1) on u_i and 2(i-1)+1 on v_{i,j_i}.
Embedding decode_gadget_cycle(int k, int d, const EdgeColouring& c, const SetFamily& f,
                              const std::vector<int>& representatives);

struct BollobasReport {
  bool conditions_hold = false;
  int n = 0;
  int a = 0;
  int b = 0;
  std::int64_t bound = 0;  // C(a+b, a) when sizes are uniform
  std::string violation;   // first failed condition, empty when none
};

/// Checks the cross-intersection conditions on (A_i, B_i): all |A_i| = a,
/// all |B_i| = b, A_i ∩ B_i empty, A_i ∩ B_j non-empty for i != j. When they
/// hold, n <= C(a+b, a) is asserted.
BollobasReport bollobas_check(const std::vector<std::pair<std::vector<int>, std::vector<int>>>& pairs);

}  // namespace dar
