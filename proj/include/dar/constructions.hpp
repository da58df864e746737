#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>

#include "dar/colouring.hpp"
#include "dar/graph.hpp"

namespace dar {

/// The cycle blow-up host G_{k,d} for rainbow C_k.
///
/// Even k: hubs u_1..u_{k/2}, parallel vertices v_{i,j} (1 <= j <= d) each
/// joined to u_i and u_{(i mod k/2)+1}. Odd k: hubs u_1..u_{(k+1)/2},
/// parallels only for i <= (k-1)/2 joined to u_i and u_{i+1}, plus the single
/// edge u_{(k+1)/2} u_1.
///
/// Vertex ids: hubs first (u_i is i-1), then v_{i,j} in row-major order.
/// Edge ids: u_i v_{i,j} then v_{i,j} u_next for each (i, j), closing edge last.
struct Gadget {
  int cycle_length = 0;
  int multiplicity = 0;
  Graph graph;

  int hub_count() const;
  int parallel_rows() const;  // number of i with parallels
  Vertex hub(int i) const;                   // 1-based
  Vertex parallel(int i, int j) const;       // 1-based
  EdgeId into_parallel(int i, int j) const;  // u_i v_{i,j}
  EdgeId out_of_parallel(int i, int j) const;
  EdgeId closing_edge() const;  // -1 for even cycle length
};

Gadget make_gadget(int cycle_length, int multiplicity);
inline Graph gadget(int cycle_length, int multiplicity) {
  return make_gadget(cycle_length, multiplicity).graph;
}

Graph complete_graph(int n);
Graph complete_bipartite(int s, int t);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph petersen();

/// Connected k-regular graph of girth >= k+2 that is not k-edge-colourable.
/// k = 2: C_5. k = 3: two Petersen graphs, each minus one edge x_i y_i,
/// joined through adjacent new vertices u, v with u ~ x_1, y_1 and v ~ x_2, y_2.
Graph class2_regular(int k);

/// 8-cycle v_0..v_7, spokes v_{2i} w, chords v_0 v_4 and v_2 v_6 (w is vertex 8).
Graph nonmono_gadget();

struct ColouredGraph {
  Graph graph;
  EdgeColouring colouring;
};

/// K_{3^r,3^r} with both sides indexed by vectors of Z_3^r and edge {u, v}
/// coloured u - v. Left vertex x is id x, right vertex y is id 3^r + y, and a
/// vector is its base-3 digits; colour = (base-3 value of u - v) + 1.
ColouredGraph z3_coloured_bipartite(int r);

/// G_{4r,3(r-1)} with c(u_i v_{i,j}) = j and c(v_{i,j} u_{i+1}) = j+1 (j mod 3 != 0)
/// or j-2 (j mod 3 == 0) for even i; all other edges uncoloured.
struct PartialGadgetColouring {
  Gadget gadget;
  EdgeColouring colouring;
};
PartialGadgetColouring lower_bound_partial_colouring(int r);

/// Named graphs: petersen, k4, k5, k33, prism, k4_subdivided, bull,
/// triangle_pendant, chair, 2k2, c_N, p_N (N vertices), star_N (N edges),
/// matching_N, k_N, k_S_T (also kST for single digits S,T >= 1), gadget_K_D,
/// class2_K, nonmono. Joining names with '+' takes a disjoint union.
Graph named_graph(const std::string& name);

/// Host of maximum degree e(f) - 1 in which every proper colouring has a
/// rainbow copy of the forest f. Built by induction on the number of trees:
/// a single tree on k+2 vertices uses class2_regular(k); otherwise the tree T
/// with fewest edges is glued to the rest R to give a one-fewer-tree forest,
/// whose host is repeated C(e(T)+e(R), e(T)) + 1 times.
Graph forest_host(const Graph& f);

std::int64_t binomial(int n, int k);

/// Random connected bridgeless 3-regular simple graph on n vertices (n even,
/// n >= 4): a Hamiltonian cycle plus a perfect matching, then double-edge
/// swaps that keep the graph simple, connected and bridgeless.
Graph random_bridgeless_cubic(int n, std::mt19937_64& rng);

}  // namespace dar
