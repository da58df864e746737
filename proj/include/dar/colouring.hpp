#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "dar/graph.hpp"

namespace dar {

using Colour = int;  // colours are 1, 2, ...

/// Total or partial map from edge id to colour. Uncoloured edges are
/// explicit (std::nullopt), never a sentinel colour.
class EdgeColouring {
 public:
  EdgeColouring() = default;
  explicit EdgeColouring(int edge_count) : colours_(edge_count) {}
  explicit EdgeColouring(std::vector<std::optional<Colour>> colours) : colours_(std::move(colours)) {}
  static EdgeColouring total(const std::vector<Colour>& colours);

  int edge_count() const { return static_cast<int>(colours_.size()); }
  const std::optional<Colour>& operator[](EdgeId e) const { return colours_[e]; }
  bool coloured(EdgeId e) const { return colours_[e].has_value(); }
  Colour at(EdgeId e) const;
  void set(EdgeId e, Colour c);
  void clear(EdgeId e) { colours_[e].reset(); }

  bool is_total() const;
  int colour_count() const;   // distinct colours in use
  Colour max_colour() const;  // 0 when nothing is coloured

  const std::vector<std::optional<Colour>>& values() const { return colours_; }

  friend bool operator==(const EdgeColouring&, const EdgeColouring&) = default;

 private:
  std::vector<std::optional<Colour>> colours_;
};

/// Colours on the coloured edges at v.
std::set<Colour> incident_colours(const Graph& g, const EdgeColouring& c, Vertex v);

/// No two coloured edges at a vertex share a colour.
bool is_proper_partial(const Graph& g, const EdgeColouring& c);
/// Total and proper.
bool is_proper(const Graph& g, const EdgeColouring& c);
/// No colour appears more than m times at any vertex; uncoloured edges are ignored.
bool is_m_bounded(const Graph& g, const EdgeColouring& c, int m);

/// Edge order used by every search: descending endpoint-degree sum, ties by id.
std::vector<EdgeId> search_edge_order(const Graph& g);

/// Exact chromatic index: Delta(g) when a Delta-edge-colouring exists, else Delta(g) + 1.
int chromatic_index(const Graph& g);

/// A proper colouring with at most `colours` colours, if one exists.
std::optional<EdgeColouring> find_edge_colouring(const Graph& g, int colours);

struct EnumerationOptions {
  std::optional<int> max_colours;  // default e(g): exhaustive
};

/// One representative per colour-permutation class of proper colourings.
/// Along search_edge_order, each edge's colour is at most one more than the
/// largest colour used before it. Return false from visit to stop.
void for_each_proper_colouring(const Graph& g, const EnumerationOptions& options,
                               const std::function<bool(const EdgeColouring&)>& visit);

std::int64_t count_proper_colourings(const Graph& g, const EnumerationOptions& options = {});

struct CompletionOptions {
  std::optional<int> max_colours;     // unlimited when empty: fresh colours allowed
  std::optional<std::uint64_t> seed;  // randomised edge and colour order
};

/// Total proper extension of a partial colouring, if one exists.
std::optional<EdgeColouring> complete_to_proper(const Graph& g, const EdgeColouring& partial,
                                                const CompletionOptions& options = {});

/// Random colouring with every colour at most m times per vertex (m = 1 gives
/// a proper colouring). Edges are visited in random order; each picks a
/// uniformly random admissible colour from 1..palette, or the next colour
/// above the palette when none is admissible.
EdgeColouring random_bounded_colouring(const Graph& g, int m, int palette, std::mt19937_64& rng);

inline EdgeColouring random_proper_colouring(const Graph& g, int palette, std::mt19937_64& rng) {
  return random_bounded_colouring(g, 1, palette, rng);
}

}  // namespace dar
