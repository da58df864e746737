#pragma once

#include <optional>
#include <vector>

#include "dar/colouring.hpp"
#include "dar/graph.hpp"

namespace dar {

/// A perfect matching, if one exists. Backtracking on the smallest unmatched
/// vertex, cut as soon as the unmatched vertices induce an odd component.
/// Edge ids are returned in increasing order.
std::optional<std::vector<EdgeId>> perfect_matching(const Graph& g);

/// A perfect matching M of a cubic graph and the cycles of G - M.
struct TwoFactorDecomposition {
  std::vector<Edge> matching;               // sorted
  std::vector<std::vector<Vertex>> cycles;  // v_0 v_1 ... v_{L-1}, closing back to v_0

  /// Cycles of g - M. Each starts at its smallest vertex and continues to its
  /// smaller neighbour; cycles are ordered by first vertex. Throws unless M is
  /// a perfect matching and g - M is 2-regular.
  static TwoFactorDecomposition build(const Graph& g, const std::vector<EdgeId>& matching);

  bool in_matching(Vertex a, Vertex b) const;
};

/// Edges v_i v_{i+1} of an odd cycle with none of v_{i-2}v_{i+1},
/// v_{i-1}v_{i+2}, v_i v_{i+3} in M (indices mod the cycle length), in order of i.
std::vector<Edge> free_edges(const TwoFactorDecomposition& d, int cycle_index);

/// One free edge of an odd cycle, found by the counting argument: with
/// I = {i : v_i v_{i+3} in M}, take the first i with i+1, i+2 outside I; the
/// edge is v_{i+3} v_{i+4} when i is in I and v_{i+2} v_{i+3} otherwise.
Edge odd_cycle_free_edge(const TwoFactorDecomposition& d, int cycle_index);

/// Proper colouring with colours 1..4 and no rainbow C_4 of a connected
/// bridgeless cubic graph: M gets 4, one free edge per odd cycle gets 3, and
/// the paths and even cycles left over alternate 1 and 2.
EdgeColouring avoid_rainbow_c4_cubic(const Graph& g);
EdgeColouring avoid_rainbow_c4_cubic(const Graph& g, const TwoFactorDecomposition& d);

/// Extends a colouring of g minus the degree-2 vertex u (u's two edges left
/// uncoloured in c) to all of g without creating a rainbow C_4. With v_1 < v_2
/// the neighbours of u, the case is chosen by |N(v_1) ∩ N(v_2)|; alpha and
/// beta are the two smallest colours above those in use.
EdgeColouring extend_through_degree2(const Graph& g, Vertex u, const EdgeColouring& c);

/// True when no copy of C_4 in g is rainbow under the (possibly partial) c;
/// copies with an uncoloured edge are ignored.
bool free_of_rainbow_c4(const Graph& g, const EdgeColouring& c);

}  // namespace dar
