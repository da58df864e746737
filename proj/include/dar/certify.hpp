#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dar/colouring.hpp"
#include "dar/graph.hpp"
#include "dar/pattern.hpp"

namespace dar {

/// Which colourings the search quantifies over.
struct Mode {
  enum class Kind { proper, m_bounded, palette_limited };
  Kind kind = Kind::proper;
  int parameter = 1;  // m for m_bounded, q for palette_limited

  static Mode proper() { return {}; }
  static Mode m_bounded(int m);
  static Mode palette_limited(int q);

  // Multiplicity allowed per vertex and colour.
  int multiplicity() const { return kind == Kind::m_bounded ? parameter : 1; }
  bool admits(const Graph& g, const EdgeColouring& c) const;

  friend bool operator==(const Mode&, const Mode&) = default;
};

/// "proper", "m=K", "palette=Q".
std::string to_string(const Mode& mode);
Mode parse_mode(const std::string& text);

enum class Verdict { forces, witness_found, inconclusive };
std::string to_string(Verdict v);

struct SearchStats {
  std::int64_t nodes = 0;  // colour assignments tried
  int max_depth = 0;
  double wall_ms = 0;      // informational; not part of the serialised certificate
};

struct ForcesOptions {
  std::optional<std::int64_t> budget_nodes;
  // Wall-clock cut-off. Unlike the node budget it makes the outcome depend on the machine.
  std::optional<std::chrono::milliseconds> time_limit;
  int workers = 1;
  // Drop edges that lie in no copy of h before searching (ignored for palette_limited).
  bool restrict_to_copies = true;
};

/// Result of forces(). A witness is checked on construction: it must be a
/// total colouring admitted by the mode with no rainbow copy of the pattern.
class ForcesCertificate {
 public:
  static ForcesCertificate make(const Graph& g, const Pattern& h, Mode mode, Verdict verdict,
                                std::optional<EdgeColouring> witness, SearchStats stats,
                                std::optional<std::int64_t> budget);

  Verdict verdict() const { return verdict_; }
  const std::optional<EdgeColouring>& witness() const { return witness_; }
  const SearchStats& stats() const { return stats_; }
  Mode mode() const { return mode_; }
  std::optional<std::int64_t> budget() const { return budget_; }

 private:
  Verdict verdict_ = Verdict::inconclusive;
  std::optional<EdgeColouring> witness_;
  SearchStats stats_;
  Mode mode_;
  std::optional<std::int64_t> budget_;
};

/// Does every colouring of g admitted by mode contain a rainbow copy of h?
///
/// Colours are assigned edge by edge along search_edge_order with first-use
/// symmetry breaking (each edge's colour is at most one above the largest
/// colour used so far, capped at q in palette mode and at e(g) otherwise).
/// A branch is cut when the mode is violated or a copy of h becomes fully
/// coloured and rainbow. In proper and m-bounded modes, a branch in which every
/// copy already repeats a colour is finished with fresh colours and returned
/// as a witness.
///
/// The tree is split at a fixed depth into ordered branches; workers only
/// change speed. The witness of the lowest-index branch wins and the node
/// budget is charged cumulatively in branch order, so the certificate does not
/// depend on the worker count.
ForcesCertificate forces(const Graph& g, const Pattern& h, Mode mode, const ForcesOptions& options = {});

struct MultiplicitySearch {
  std::optional<int> d;  // least forcing multiplicity found
  bool inconclusive = false;
  std::vector<std::pair<int, ForcesCertificate>> runs;  // one per multiplicity tried
};

/// Least d <= d_max such that G_{k,d} forces a rainbow C_k under every proper
/// colouring. Stops at the first inconclusive run.
MultiplicitySearch smallest_forcing_multiplicity(int k, int d_max, const ForcesOptions& options = {});

struct UpperCertificate {
  std::optional<int> degree_bound;  // Delta(g) when g forces h
  std::optional<int> size_bound;    // e(g) when g forces h
  ForcesCertificate certificate;
};

UpperCertificate ar_d_upper_certificate(const Pattern& h, const Graph& g, const ForcesOptions& options = {});

/// Host/pattern pairs of small graphs known to be forced:
/// triangle_pendant_via_k4subdiv, bull_via_k5, bull_via_k4.
ForcesCertificate fc_membership_check(const std::string& name, const ForcesOptions& options = {});
std::vector<std::string> fc_membership_names();

}  // namespace dar
