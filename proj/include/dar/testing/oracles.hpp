#pragma once

// Brute-force reference implementations. None of these share search code
// with the library: they enumerate maps, partitions and bases directly and
// are only meant for small instances.

#include <cstdint>
#include <optional>
#include <vector>

#include "dar/certify.hpp"
#include "dar/colouring.hpp"
#include "dar/graph.hpp"
#include "dar/lp.hpp"

namespace dar::oracle {

/// Shortest cycle by enumerating simple cycles from their smallest vertex.
std::optional<int> girth(const Graph& g);

/// Every injective map V(h) -> V(g) preserving edges, vertices assigned in id order.
std::vector<std::vector<Vertex>> injective_maps(const Graph& h, const Graph& g);
std::int64_t automorphism_count(const Graph& h);
/// Distinct copies of h in g as sorted host edge-id sets.
std::vector<std::vector<EdgeId>> copy_edge_sets(const Graph& h, const Graph& g);

bool has_rainbow_copy(const Graph& g, const EdgeColouring& c, const Graph& h);

/// Pairwise check of every two edges sharing a vertex.
bool is_proper(const Graph& g, const EdgeColouring& c);

/// Colour classes of proper colourings as set partitions of E(g) into
/// matchings with at most max_blocks blocks, via restricted growth strings.
std::int64_t proper_partition_count(const Graph& g, int max_blocks);

/// Forces verdict by running through all set partitions of E(g) (e(g) <= 10).
/// Returns true when every admitted partition has a rainbow copy.
bool forces(const Graph& g, const Graph& h, Mode mode);

/// Exists a proper colouring with at most q colours, naive backtracking in
/// edge-id order.
bool edge_colourable(const Graph& g, int q);

/// Optimum of min 1'x, Ax >= 1, x >= 0 over all basic feasible solutions.
Rational covering_optimum(const std::vector<std::vector<int>>& a);

/// Uncoloured edges get, in id order, the smallest colour free at both ends.
EdgeColouring greedy_completion(const Graph& g, const EdgeColouring& partial);

}  // namespace dar::oracle
