#pragma once

#include <optional>
#include <vector>

#include "dar/colouring.hpp"
#include "dar/copies.hpp"
#include "dar/graph.hpp"
#include "dar/pattern.hpp"

namespace dar {

/// An injective map of a pattern into a host with the image edges and their colours.
struct Embedding {
  std::vector<Vertex> vertex_map;  // pattern vertex -> host vertex
  std::vector<EdgeId> image_edges; // per pattern edge
  std::vector<Colour> colours;     // per pattern edge

  bool is_rainbow() const;
};

Embedding make_embedding(const Graph& host, const EdgeColouring& c, const Pattern& h,
                         std::vector<Vertex> vertex_map);

/// True when the embedding is injective, every image edge exists, and the
/// recorded colours match c and are pairwise distinct.
bool is_rainbow_embedding(const Graph& host, const EdgeColouring& c, const Pattern& h,
                          const Embedding& embedding);

/// Some rainbow copy of h under the total colouring c, if any.
std::optional<Embedding> find_rainbow_copy(const Graph& g, const EdgeColouring& c, const Pattern& h);

/// True iff a copy through last_edge is now fully coloured and rainbow.
bool has_rainbow_completion_conflict(const CopyIndex& index, const EdgeColouring& c, EdgeId last_edge);

/// Rainbow copy of h in K_n (edge ids as in complete_graph(n)) built vertex
/// by vertex along h's degeneracy order: each new vertex is the smallest id
/// whose edges back to the placed vertices avoid the colours already used.
/// Requires c proper and n >= k*e(h) - k + v(h) (k the degeneracy); the
/// candidate set is then never empty and an empty one throws.
Embedding greedy_rainbow_embed(int n, const EdgeColouring& c, const Pattern& h);

struct BoundedEmbedResult {
  Embedding embedding;
  long backtracks = 0;
};

/// Variant for colourings with each colour at most m times per vertex,
/// requiring n >= m*k*e(h) - m*k + v(h). When k == 1 or m == 1 the greedy
/// step always succeeds (backtracks == 0 is asserted). For k >= 2 and m >= 2
/// edges added in one step may share a colour, which the counting bound does
/// not cover; the search then backtracks over earlier choices.
BoundedEmbedResult bounded_rainbow_embed(int n, const EdgeColouring& c, const Pattern& h, int m);

/// Rainbow copy of a non-star tree t on k+2 vertices in a connected k-regular
/// host of girth >= k+2 under a proper colouring that is not a
/// k-edge-colouring. Follows the constructive argument step by step: seed pair
/// u_1 u_2 with N_c(u_2) not inside N_c(u_1), then the part of t hanging off
/// x_2, then the part off x_1, then the leaf x_0.
Embedding rainbow_tree_embed(const Graph& g, const EdgeColouring& c, const Pattern& t);

}  // namespace dar
