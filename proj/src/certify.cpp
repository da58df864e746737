#include "dar/certify.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <regex>
#include <thread>

#include "dar/constructions.hpp"
#include "dar/copies.hpp"
#include "dar/error.hpp"
#include "dar/rainbow.hpp"

namespace dar {

Mode Mode::m_bounded(int m) {
  require(m >= 1, "m must be at least 1");
  return {Kind::m_bounded, m};
}

Mode Mode::palette_limited(int q) {
  require(q >= 1, "palette size must be at least 1");
  return {Kind::palette_limited, q};
}

bool Mode::admits(const Graph& g, const EdgeColouring& c) const {
  if (c.edge_count() != g.edge_count() || !c.is_total()) return false;
  switch (kind) {
    case Kind::proper:
      return is_proper(g, c);
    case Kind::m_bounded:
      return is_m_bounded(g, c, parameter);
    case Kind::palette_limited:
      return is_proper(g, c) && c.max_colour() <= parameter;
  }
  return false;
}

std::string to_string(const Mode& mode) {
  switch (mode.kind) {
    case Mode::Kind::proper:
      return "proper";
    case Mode::Kind::m_bounded:
      return "m=" + std::to_string(mode.parameter);
    case Mode::Kind::palette_limited:
      return "palette=" + std::to_string(mode.parameter);
  }
  return "?";
}

Mode parse_mode(const std::string& text) {
  if (text == "proper") return Mode::proper();
  static const std::regex pattern(R"((m|palette)=(\d{1,6}))");
  std::smatch match;
  require(std::regex_match(text, match, pattern), "unknown mode '" + text + "' (proper, m=K, palette=Q)");
  const int value = std::stoi(match[2]);
  return match[1] == "m" ? Mode::m_bounded(value) : Mode::palette_limited(value);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::forces:
      return "forces";
    case Verdict::witness_found:
      return "witness_found";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

ForcesCertificate ForcesCertificate::make(const Graph& g, const Pattern& h, Mode mode, Verdict verdict,
                                          std::optional<EdgeColouring> witness, SearchStats stats,
                                          std::optional<std::int64_t> budget) {
  ensure(witness.has_value() == (verdict == Verdict::witness_found),
         "a witness accompanies exactly the witness_found verdict");
  if (witness) {
    ensure(mode.admits(g, *witness), "witness is not a colouring of the stated mode");
    ensure(!find_rainbow_copy(g, *witness, h).has_value(), "witness contains a rainbow copy");
  }
  ForcesCertificate cert;
  cert.verdict_ = verdict;
  cert.witness_ = std::move(witness);
  cert.stats_ = stats;
  cert.mode_ = mode;
  cert.budget_ = budget;
  return cert;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Limits {
  std::int64_t node_cap;  // nodes this run may spend
  std::optional<Clock::time_point> deadline;
};

struct Prefix {
  std::vector<Colour> colours;  // along the search order
  Colour max_used = 0;
};

enum class Outcome { exhausted, witness, aborted };

struct BranchResult {
  Outcome outcome = Outcome::exhausted;
  std::int64_t nodes = 0;
  int max_depth = 0;
  std::vector<Colour> witness;  // by edge id
};

// Incremental colouring state over one graph: per-vertex colour counts and,
// per copy, how many edges are coloured and how many equal-colour pairs it has.
class SearchState {
 public:
  SearchState(const Graph& g, const CopyIndex& index, Mode mode, const std::vector<EdgeId>& order)
      : g_(g), index_(index), mode_(mode), order_(order) {
    const int m = g.edge_count();
    cap_ = mode.kind == Mode::Kind::palette_limited ? mode.parameter : std::max(m, 1);
    stride_ = cap_ + 1;
    counts_.assign(static_cast<std::size_t>(g.vertex_count()) * stride_, 0);
    colour_.assign(m, 0);
    coloured_.assign(index.size(), 0);
    dup_.assign(index.size(), 0);
    alive_ = index.size();
  }

  int cap() const { return cap_; }
  int alive() const { return alive_; }
  Colour colour(EdgeId e) const { return colour_[e]; }

  bool fits(EdgeId e, Colour c) const {
    const Edge& edge = g_.edge(e);
    const int m = mode_.multiplicity();
    return count(edge.u, c) < m && count(edge.v, c) < m;
  }

  // Colours e with c; returns true if that completes a rainbow copy.
  bool assign(EdgeId e, Colour c) {
    const Edge& edge = g_.edge(e);
    ++counts_[slot(edge.u, c)];
    ++counts_[slot(edge.v, c)];
    colour_[e] = c;
    bool rainbow = false;
    for (int id : index_.copies_through(e)) {
      int repeats = 0;
      for (EdgeId f : index_.copies()[id].edges)
        if (f != e && colour_[f] == c) ++repeats;
      if (dup_[id] == 0 && repeats > 0) --alive_;
      dup_[id] += repeats;
      ++coloured_[id];
      deltas_.push_back(repeats);
      if (dup_[id] == 0 && coloured_[id] == static_cast<int>(index_.copies()[id].edges.size())) rainbow = true;
    }
    return rainbow;
  }

  void unassign(EdgeId e) {
    const auto& through = index_.copies_through(e);
    for (auto it = through.rbegin(); it != through.rend(); ++it) {
      const int id = *it;
      const int repeats = deltas_.back();
      deltas_.pop_back();
      --coloured_[id];
      dup_[id] -= repeats;
      if (dup_[id] == 0 && repeats > 0) ++alive_;
    }
    const Edge& edge = g_.edge(e);
    const Colour c = colour_[e];
    --counts_[slot(edge.u, c)];
    --counts_[slot(edge.v, c)];
    colour_[e] = 0;
  }

  // Palette mode only: every uncoloured edge next to e still has a colour.
  bool neighbours_viable(EdgeId e) const {
    const Edge& edge = g_.edge(e);
    for (Vertex x : {edge.u, edge.v})
      for (EdgeId f : g_.incident(x)) {
        if (colour_[f] != 0) continue;
        bool any = false;
        for (Colour c = 1; c <= cap_ && !any; ++c) any = fits(f, c);
        if (!any) return false;
      }
    return true;
  }

  // Current colouring with every uncoloured edge given its own new colour.
  std::vector<Colour> completed(Colour max_used) const {
    std::vector<Colour> result = colour_;
    Colour next = max_used;
    for (EdgeId e : order_)
      if (result[e] == 0) result[e] = ++next;
    return result;
  }

 private:
  int count(Vertex v, Colour c) const { return counts_[slot(v, c)]; }
  std::size_t slot(Vertex v, Colour c) const { return static_cast<std::size_t>(v) * stride_ + c; }

  const Graph& g_;
  const CopyIndex& index_;
  Mode mode_;
  const std::vector<EdgeId>& order_;
  int cap_ = 0;
  int stride_ = 0;
  std::vector<int> counts_;
  std::vector<Colour> colour_;
  std::vector<int> coloured_;
  std::vector<int> dup_;
  std::vector<int> deltas_;
  int alive_ = 0;
};

class Searcher {
 public:
  Searcher(const Graph& g, const CopyIndex& index, Mode mode, const std::vector<EdgeId>& order)
      : g_(g), mode_(mode), order_(order), state_(g, index, mode, order) {}

  // Depth-first enumeration of the canonical prefixes of the given depth.
  // Terminal nodes above that depth become prefixes of their own.
  std::vector<Prefix> prefixes(int depth, std::int64_t& nodes) {
    std::vector<Prefix> out;
    collect_depth_ = depth;
    collected_ = &out;
    nodes_ = 0;
    limits_ = {std::numeric_limits<std::int64_t>::max(), std::nullopt};
    dfs(0, 0);
    collected_ = nullptr;
    nodes = nodes_;
    return out;
  }

  BranchResult run(const Prefix& prefix, const Limits& limits) {
    limits_ = limits;
    nodes_ = 0;
    max_depth_ = 0;
    aborted_ = false;
    witness_.clear();
    const int depth = static_cast<int>(prefix.colours.size());
    for (int i = 0; i < depth; ++i) {
      const bool rainbow = state_.assign(order_[i], prefix.colours[i]);
      ensure(!rainbow, "stored prefix completes a rainbow copy");
    }
    const bool found = dfs(depth, prefix.max_used);
    for (int i = depth - 1; i >= 0; --i) state_.unassign(order_[i]);

    BranchResult result;
    result.nodes = nodes_;
    result.max_depth = max_depth_;
    if (found) {
      result.outcome = Outcome::witness;
      result.witness = std::move(witness_);
    } else {
      result.outcome = aborted_ ? Outcome::aborted : Outcome::exhausted;
    }
    return result;
  }

 private:
  bool terminal(int depth, Colour max_used) {
    const int m = g_.edge_count();
    if (depth == m) {
      witness_ = state_.completed(max_used);
      return true;
    }
    if (state_.alive() == 0 && mode_.kind != Mode::Kind::palette_limited) {
      witness_ = state_.completed(max_used);
      return true;
    }
    return false;
  }

  void record_prefix(int depth, Colour max_used) {
    Prefix p;
    p.max_used = max_used;
    for (int i = 0; i < depth; ++i) p.colours.push_back(state_.colour(order_[i]));
    collected_->push_back(std::move(p));
  }

  bool dfs(int depth, Colour max_used) {
    max_depth_ = std::max(max_depth_, depth);
    if (collected_) {
      if (depth == collect_depth_ || terminal(depth, max_used)) {
        record_prefix(depth, max_used);
        return false;
      }
    } else if (terminal(depth, max_used)) {
      return true;
    }
    const EdgeId e = order_[depth];
    const Colour top = std::min(state_.cap(), max_used + 1);
    const bool palette = mode_.kind == Mode::Kind::palette_limited;
    for (Colour c = 1; c <= top; ++c) {
      if (!state_.fits(e, c)) continue;
      if (nodes_ >= limits_.node_cap || out_of_time()) {
        aborted_ = true;
        return false;
      }
      ++nodes_;
      const bool rainbow = state_.assign(e, c);
      bool found = false;
      if (!rainbow && (!palette || state_.neighbours_viable(e))) found = dfs(depth + 1, std::max(max_used, c));
      state_.unassign(e);
      if (found) return true;
      if (aborted_) return false;
    }
    return false;
  }

  bool out_of_time() const {
    if (!limits_.deadline || (nodes_ & 1023) != 0) return false;
    return Clock::now() >= *limits_.deadline;
  }

  const Graph& g_;
  Mode mode_;
  const std::vector<EdgeId>& order_;
  SearchState state_;
  Limits limits_{0, std::nullopt};
  std::int64_t nodes_ = 0;
  int max_depth_ = 0;
  bool aborted_ = false;
  std::vector<Colour> witness_;
  int collect_depth_ = 0;
  std::vector<Prefix>* collected_ = nullptr;
};

constexpr int min_branches = 32;
constexpr int max_split_depth = 6;

struct SearchOutcome {
  Verdict verdict = Verdict::inconclusive;
  std::vector<Colour> witness;
  SearchStats stats;
};

SearchOutcome search(const Graph& g, const Pattern& h, Mode mode, const ForcesOptions& options,
                     Clock::time_point start) {
  const CopyIndex index(g, h);
  const std::vector<EdgeId> order = search_edge_order(g);
  const std::int64_t budget = options.budget_nodes.value_or(std::numeric_limits<std::int64_t>::max());
  std::optional<Clock::time_point> deadline;
  if (options.time_limit) deadline = start + *options.time_limit;

  SearchOutcome out;
  std::vector<Prefix> branches;
  std::int64_t prefix_nodes = 0;
  {
    Searcher root(g, index, mode, order);
    const int limit = std::min(g.edge_count(), max_split_depth);
    for (int depth = std::min(1, limit);; ++depth) {
      branches = root.prefixes(depth, prefix_nodes);
      if (static_cast<int>(branches.size()) >= min_branches || depth >= limit) break;
    }
    out.stats.max_depth = branches.empty() ? 0 : static_cast<int>(branches.back().colours.size());
  }
  if (prefix_nodes > budget) {
    out.stats.nodes = budget;
    return out;
  }
  const std::int64_t remaining = budget - prefix_nodes;

  const int count = static_cast<int>(branches.size());
  std::vector<std::optional<BranchResult>> results(count);
  const int workers = std::max(1, std::min(options.workers, count));

  if (workers == 1) {
    Searcher searcher(g, index, mode, order);
    std::int64_t spent = 0;
    for (int i = 0; i < count; ++i) {
      results[i] = searcher.run(branches[i], {remaining - spent, deadline});
      spent += results[i]->nodes;
      if (results[i]->outcome != Outcome::exhausted) break;
    }
  } else {
    // Later branches are skipped once an earlier one is decisive; the merge
    // below never looks past the first decisive branch anyway.
    std::atomic<int> next{0};
    std::atomic<int> stop_at{count};
    auto work = [&] {
      Searcher searcher(g, index, mode, order);
      for (int i = next++; i < count; i = next++) {
        if (i > stop_at.load()) continue;
        BranchResult r = searcher.run(branches[i], {remaining, deadline});
        if (r.outcome != Outcome::exhausted) {
          int seen = stop_at.load();
          while (i < seen && !stop_at.compare_exchange_weak(seen, i)) {
          }
        }
        results[i] = std::move(r);
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  std::int64_t spent = 0;
  for (int i = 0; i < count; ++i) {
    ensure(results[i].has_value(), "branch result missing before the first decisive branch");
    const BranchResult& r = *results[i];
    out.stats.max_depth = std::max(out.stats.max_depth, r.max_depth);
    spent += r.nodes;
    if (r.outcome == Outcome::aborted || spent > remaining) {
      out.stats.nodes = options.budget_nodes && !deadline ? budget : prefix_nodes + std::min(spent, remaining);
      return out;
    }
    if (r.outcome == Outcome::witness) {
      out.verdict = Verdict::witness_found;
      out.witness = r.witness;
      out.stats.nodes = prefix_nodes + spent;
      return out;
    }
  }
  out.verdict = Verdict::forces;
  out.stats.nodes = prefix_nodes + spent;
  return out;
}

}  // namespace

ForcesCertificate forces(const Graph& g, const Pattern& h, Mode mode, const ForcesOptions& options) {
  require(h.edge_count() >= 1, "pattern must have an edge");
  require(g.edge_count() >= h.edge_count(), "host has fewer edges than the pattern");
  require(options.workers >= 1, "workers must be at least 1");
  if (options.budget_nodes) require(*options.budget_nodes >= 0, "budget must be non-negative");
  const auto start = Clock::now();

  // Edges outside every copy never decide rainbowness, and in the unbounded
  // palette modes they can always take fresh colours.
  std::vector<EdgeId> kept;
  bool no_copies = false;
  const bool restrict = options.restrict_to_copies && mode.kind != Mode::Kind::palette_limited;
  if (restrict) {
    const CopyIndex index(g, h);
    no_copies = index.size() == 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (!index.copies_through(e).empty()) kept.push_back(e);
    if (static_cast<int>(kept.size()) == g.edge_count()) kept.clear();
  }

  SearchOutcome outcome;
  if (!kept.empty()) {
    std::vector<EdgeId> removed;
    for (EdgeId e = 0, j = 0; e < g.edge_count(); ++e) {
      if (j < static_cast<int>(kept.size()) && kept[j] == e)
        ++j;
      else
        removed.push_back(e);
    }
    const Graph core = remove_edges(g, removed);
    outcome = search(core, h, mode, options, start);
    if (outcome.verdict == Verdict::witness_found) {
      std::vector<Colour> full(g.edge_count(), 0);
      Colour top = 0;
      for (std::size_t i = 0; i < kept.size(); ++i) {
        full[kept[i]] = outcome.witness[i];
        top = std::max(top, outcome.witness[i]);
      }
      for (EdgeId e : removed) full[e] = ++top;
      outcome.witness = std::move(full);
    }
  } else if (no_copies) {
    // No copy at all: every colour distinct is a witness.
    outcome.verdict = Verdict::witness_found;
    outcome.witness.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) outcome.witness[e] = e + 1;
  } else {
    outcome = search(g, h, mode, options, start);
  }
  outcome.stats.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();

  std::optional<EdgeColouring> witness;
  if (outcome.verdict == Verdict::witness_found) witness = EdgeColouring::total(outcome.witness);
  return ForcesCertificate::make(g, h, mode, outcome.verdict, std::move(witness), outcome.stats,
                                 options.budget_nodes);
}

MultiplicitySearch smallest_forcing_multiplicity(int k, int d_max, const ForcesOptions& options) {
  require(k >= 3, "cycle length must be at least 3");
  require(d_max >= 1, "d_max must be at least 1");
  const Pattern cycle(cycle_graph(k), "c" + std::to_string(k));
  MultiplicitySearch result;
  for (int d = 1; d <= d_max; ++d) {
    ForcesCertificate cert = forces(gadget(k, d), cycle, Mode::proper(), options);
    const Verdict v = cert.verdict();
    result.runs.emplace_back(d, std::move(cert));
    if (v == Verdict::forces) {
      result.d = d;
      break;
    }
    if (v == Verdict::inconclusive) {
      result.inconclusive = true;
      break;
    }
  }
  return result;
}

UpperCertificate ar_d_upper_certificate(const Pattern& h, const Graph& g, const ForcesOptions& options) {
  UpperCertificate result{std::nullopt, std::nullopt, forces(g, h, Mode::proper(), options)};
  if (result.certificate.verdict() == Verdict::forces) {
    result.degree_bound = g.max_degree();
    result.size_bound = g.edge_count();
  }
  return result;
}

std::vector<std::string> fc_membership_names() {
  return {"triangle_pendant_via_k4subdiv", "bull_via_k5", "bull_via_k4"};
}

ForcesCertificate fc_membership_check(const std::string& name, const ForcesOptions& options) {
  std::string pattern, host;
  if (name == "triangle_pendant_via_k4subdiv") {
    pattern = "triangle_pendant";
    host = "k4_subdivided";
  } else if (name == "bull_via_k5") {
    pattern = "bull";
    host = "k5";
  } else if (name == "bull_via_k4") {
    pattern = "bull";
    host = "k4";
  } else {
    throw InvalidInput("unknown membership check '" + name + "'");
  }
  return forces(named_graph(host), Pattern(named_graph(pattern), pattern), Mode::proper(), options);
}

}  // namespace dar
