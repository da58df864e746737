#include "dar/testing/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "dar/certify.hpp"
#include "dar/constructions.hpp"
#include "dar/copies.hpp"
#include "dar/error.hpp"
#include "dar/families.hpp"
#include "dar/matching.hpp"
#include "dar/rainbow.hpp"
#include "dar/testing/oracles.hpp"

namespace dar::testing {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 of the pair
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<NamedGraph> small_corpus() {
  std::vector<NamedGraph> out;
  for (const char* name : {"c3", "c4", "c5", "c6", "c7", "p4", "p5", "k4", "k5", "k_2_3", "k_2_4", "k33", "star_3",
                           "2k2", "bull", "triangle_pendant", "chair", "k4_subdivided", "prism", "petersen",
                           "nonmono", "gadget_5_2", "gadget_3_2", "c4+c3", "c5+p3"})
    out.push_back({name, named_graph(name)});
  return out;
}

std::vector<ForcesInstance> forces_corpus() {
  return {
      {"c3", "c3", "proper"},          {"c4", "c4", "proper"},
      {"c5", "p4", "proper"},          {"c5", "2k2", "proper"},
      {"c5", "p3", "proper"},          {"c4", "2k2", "proper"},
      {"k4", "c4", "proper"},          {"k4", "c3", "proper"},
      {"k4", "p4", "proper"},          {"k4", "2k2", "proper"},
      {"k_2_4", "c4", "proper"},       {"k_2_3", "c4", "proper"},
      {"k4_subdivided", "triangle_pendant", "proper"},
      {"c6", "c6", "proper"},          {"c6", "p4", "proper"},
      {"star_3", "star_3", "proper"},  {"p5", "p4", "proper"},
      {"chair", "p4", "proper"},       {"bull", "c3", "proper"},
      {"bull", "p4", "proper"},        {"triangle_pendant", "p4", "proper"},
      {"gadget_3_2", "c3", "proper"},  {"gadget_4_1", "c4", "proper"},
      {"c8", "c8", "proper"},          {"c4+c3", "p3+p2", "proper"},
      {"k4", "c4", "palette=3"},       {"k4", "c4", "palette=4"},
      {"k_2_4", "c4", "palette=4"},    {"k4_subdivided", "c4", "palette=3"},
      {"c5", "p4", "m=2"},             {"k4", "c3", "m=2"},
      {"k_2_3", "p3", "m=2"},          {"star_4", "star_3", "m=2"},
  };
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failures; a criterion passes when none were recorded.
struct Check {
  std::vector<std::string> failures;
  std::ostringstream notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <typename T>
  Check& note(const T& value) {
    notes << value;
    return *this;
  }
};

std::string verdict_name(const ForcesCertificate& c) { return to_string(c.verdict()); }

void within(Check& check, Clock::time_point start, double limit, const std::string& what) {
  const double s = seconds_since(start);
  check.expect(s < limit, what + " took " + std::to_string(s) + " s (limit " + std::to_string(limit) + " s)");
}

// A witness must be a valid colouring of its mode and free of rainbow copies,
// judged by the brute-force oracle.
bool witness_checks_out(const Graph& g, const Graph& h, const ForcesCertificate& cert) {
  if (!cert.witness()) return false;
  const EdgeColouring& w = *cert.witness();
  const Mode mode = cert.mode();
  bool valid = mode.kind == Mode::Kind::m_bounded ? is_m_bounded(g, w, mode.parameter) : oracle::is_proper(g, w);
  if (mode.kind == Mode::Kind::palette_limited) valid = valid && w.max_colour() <= mode.parameter;
  return valid && !oracle::has_rainbow_copy(g, w, h);
}

void criterion_d_values(Check& check, const SuiteOptions& opt) {
  ForcesOptions fo;
  fo.workers = opt.workers;
  for (auto [k, expected] : {std::pair{3, 1}, std::pair{4, 2}}) {
    const auto start = Clock::now();
    const auto r = smallest_forcing_multiplicity(k, 4, fo);
    check.expect(r.d == expected, "d(" + std::to_string(k) + ") != " + std::to_string(expected));
    within(check, start, 10, "d(" + std::to_string(k) + ")");
    check.note("d(").note(k).note(")=").note(r.d ? std::to_string(*r.d) : "none").note(" ");
  }
  fo.time_limit = std::chrono::minutes(10);
  const Pattern c5(cycle_graph(5), "c5");
  const auto below = forces(gadget(5, 2), c5, Mode::proper(), fo);
  check.expect(below.verdict() == Verdict::witness_found, "G_{5,2} did not yield a witness");
  check.expect(below.verdict() != Verdict::witness_found || witness_checks_out(gadget(5, 2), cycle_graph(5), below),
               "G_{5,2} witness failed the oracle");
  const auto at = forces(gadget(5, 3), c5, Mode::proper(), fo);
  check.expect(at.verdict() == Verdict::forces, "G_{5,3} verdict " + verdict_name(at));
  check.note("G52=").note(verdict_name(below)).note(" G53=").note(verdict_name(at)).note(" (")
      .note(at.stats().nodes).note(" nodes)");
}

void criterion_c4(Check& check, const SuiteOptions& opt) {
  const auto start = Clock::now();
  ForcesOptions fo;
  fo.workers = opt.workers;
  const auto cert = forces(complete_bipartite(2, 4), Pattern(cycle_graph(4)), Mode::proper(), fo);
  check.expect(cert.verdict() == Verdict::forces, "K_{2,4} verdict " + verdict_name(cert));
  within(check, start, 10, "K_{2,4}");

  const auto lower_start = Clock::now();
  const Graph c4 = cycle_graph(4);
  int failures = 0, graphs = 0;
  auto verify = [&](const Graph& g) {
    ++graphs;
    const EdgeColouring c = avoid_rainbow_c4_cubic(g);
    if (!oracle::is_proper(g, c) || c.max_colour() > 4 || oracle::has_rainbow_copy(g, c, c4)) ++failures;
  };
  for (const char* name : {"k4", "k33", "prism", "petersen"}) verify(named_graph(name));
  std::mt19937_64 rng(derive_seed(opt.seed, 2));
  for (int i = 0; i < 1000; ++i) verify(random_bridgeless_cubic(4 + 2 * static_cast<int>(uniform_below(rng, 7)), rng));
  check.expect(failures == 0, std::to_string(failures) + " cubic graphs failed the four-colour check");
  within(check, lower_start, 120, "cubic colourings");
  check.note("K24 ").note(verdict_name(cert)).note("; ").note(graphs).note(" cubic graphs, ").note(failures)
      .note(" failures");
}

void criterion_nonmono(Check& check, const SuiteOptions& opt) {
  const auto start = Clock::now();
  const Graph g = nonmono_gadget();
  const Pattern c4(cycle_graph(4), "c4");
  const int chi = chromatic_index(g);
  check.expect(chi == 4, "chromatic index " + std::to_string(chi));
  check.expect(!oracle::edge_colourable(g, 3) && oracle::edge_colourable(g, 4), "oracle disagrees on chromatic index");
  ForcesOptions fo;
  fo.workers = opt.workers;
  const auto limited = forces(g, c4, Mode::palette_limited(4), fo);
  check.expect(limited.verdict() == Verdict::forces, "palette=4 verdict " + verdict_name(limited));
  const auto proper = forces(g, c4, Mode::proper(), fo);
  check.expect(proper.verdict() == Verdict::witness_found, "proper verdict " + verdict_name(proper));
  check.expect(proper.verdict() != Verdict::witness_found || witness_checks_out(g, cycle_graph(4), proper),
               "proper-mode witness failed the oracle");
  within(check, start, 60, "non-monotone gadget");
  check.note("chi'=").note(chi).note(" palette=4:").note(verdict_name(limited)).note(" proper:")
      .note(verdict_name(proper));
  if (proper.witness()) check.note(" (witness uses ").note(proper.witness()->colour_count()).note(" colours)");
}

void criterion_greedy(Check& check, const SuiteOptions& opt) {
  const auto start = Clock::now();
  std::mt19937_64 rng(derive_seed(opt.seed, 4));
  int runs = 0, failures = 0;
  for (const char* name : {"p2", "p4", "c3", "c4", "k4"}) {
    const Pattern h(named_graph(name), name);
    const int k = h.degeneracy();
    const int n = k * h.edge_count() - k + h.vertex_count();
    const Graph kn = complete_graph(n);
    for (int i = 0; i < 1000; ++i, ++runs) {
      const EdgeColouring c = random_proper_colouring(kn, n, rng);
      try {
        const Embedding e = greedy_rainbow_embed(n, c, h);
        if (!is_rainbow_embedding(kn, c, h, e)) ++failures;
      } catch (const std::exception&) {
        ++failures;
      }
    }
  }
  for (const char* name : {"c3", "p4"}) {
    const Pattern h(named_graph(name), name);
    const int m = 2, k = h.degeneracy();
    const int n = m * k * h.edge_count() - m * k + h.vertex_count();
    const Graph kn = complete_graph(n);
    long backtracks = 0;
    for (int i = 0; i < 1000; ++i, ++runs) {
      const EdgeColouring c = random_bounded_colouring(kn, m, std::max(2, n / 3), rng);
      try {
        const auto r = bounded_rainbow_embed(n, c, h, m);
        backtracks += r.backtracks;
        if (!is_rainbow_embedding(kn, c, h, r.embedding)) ++failures;
      } catch (const std::exception&) {
        ++failures;
      }
    }
    check.note("m=2 ").note(name).note(" backtracks=").note(backtracks).note("; ");
  }
  check.expect(failures == 0, std::to_string(failures) + " embedding failures");
  within(check, start, 60, "greedy embeddings");
  check.note(runs).note(" embeddings, ").note(failures).note(" failures");
}

bool width_and_system(int k, int d, const EdgeColouring& c, std::string& why) {
  if (!width_criterion_check(k, d, c)) {
    why = "width criterion failed";
    return false;
  }
  const SetFamily f = build_gadget_families(k, d, c);
  const auto system = disjoint_representatives(f);
  if (!system) {
    why = "no disjoint representatives";
    return false;
  }
  const Embedding cycle = decode_gadget_cycle(k, d, c, f, *system);
  std::multiset<Colour> from_sets, from_cycle(cycle.colours.begin(), cycle.colours.end());
  for (int id : *system)
    for (const Element& e : f.sets[id])
      if (e.kind == Element::Kind::colour) from_sets.insert(e.id);
  if (from_sets != from_cycle || !cycle.is_rainbow()) {
    why = "decoded cycle colours do not match the system";
    return false;
  }
  return true;
}

void criterion_width(Check& check, const SuiteOptions& opt) {
  const Graph g43 = gadget(4, 3);
  std::int64_t count = 0, bad = 0;
  std::string why;
  for_each_proper_colouring(g43, {}, [&](const EdgeColouring& c) {
    ++count;
    if (!width_and_system(2, 3, c, why)) ++bad;
    return true;
  });
  check.expect(bad == 0, std::to_string(bad) + " colourings of G_{4,3} failed: " + why);
  const Graph g65 = gadget(6, 5);
  std::mt19937_64 rng(derive_seed(opt.seed, 5));
  int bad3 = 0;
  for (int i = 0; i < 100; ++i) {
    const EdgeColouring c = random_proper_colouring(g65, 12 + static_cast<int>(uniform_below(rng, 8)), rng);
    if (!width_and_system(3, 5, c, why)) ++bad3;
  }
  check.expect(bad3 == 0, std::to_string(bad3) + " colourings of G_{6,5} failed: " + why);
  check.note(count).note(" canonical colourings of G_{4,3}, 100 of G_{6,5}; failures ").note(bad).note("/")
      .note(bad3);
}

void criterion_forests(Check& check, const SuiteOptions& opt) {
  const auto start = Clock::now();
  const Graph c5 = cycle_graph(5);
  const Pattern p4(path_graph(4), "p4");
  std::int64_t colourings = 0, missing = 0;
  for_each_proper_colouring(c5, {}, [&](const EdgeColouring& c) {
    ++colourings;
    if (!find_rainbow_copy(c5, c, p4)) ++missing;
    return true;
  });
  check.expect(missing == 0, std::to_string(missing) + " colourings of C_5 without rainbow P_4");
  const auto upper = ar_d_upper_certificate(p4, c5);
  check.expect(upper.degree_bound == 2, "C_5 does not certify AR_d(P_4) <= 2");
  within(check, start, 1, "C_5 exhaustion");

  const Graph g = class2_regular(3);
  const StructuralReport r = structural_report(g);
  check.expect(r.regular_of == 3 && r.connected, "class-2 graph is not connected 3-regular");
  check.expect(girth(g) == 5 && oracle::girth(g) == 5, "class-2 graph girth is not 5");
  check.expect(!r.cut_vertices.empty(), "class-2 graph has no cut vertex");
  const int chi = chromatic_index(g);
  check.expect(chi == 4 && !oracle::edge_colourable(g, 3), "class-2 graph chromatic index " + std::to_string(chi));

  const Pattern chair(named_graph("chair"), "chair");
  int embedded = 0;
  for (int i = 0; i < 100; ++i) {
    CompletionOptions co;
    co.seed = derive_seed(opt.seed, 600 + i);
    const auto c = complete_to_proper(g, EdgeColouring(g.edge_count()), co);
    if (!c) continue;
    try {
      const Embedding e = rainbow_tree_embed(g, *c, chair);
      if (is_rainbow_embedding(g, *c, chair, e) && oracle::is_proper(g, *c)) ++embedded;
    } catch (const std::exception&) {
    }
  }
  check.expect(embedded == 100, "tree embedding succeeded on " + std::to_string(embedded) + "/100 colourings");
  check.note(colourings).note(" colourings of C_5; chi'=").note(chi).note("; tree embedded ").note(embedded)
      .note("/100");

  if (opt.tier == Tier::full) {
    ForcesOptions fo;
    fo.workers = opt.workers;
    fo.time_limit = std::chrono::hours(1);
    const Graph host = forest_host(named_graph("p3+p2"));
    const auto cert = forces(host, Pattern(named_graph("p3+p2"), "p3+p2"), Mode::proper(), fo);
    check.expect(cert.verdict() == Verdict::forces, "stretch: 4 x C_5 verdict " + verdict_name(cert));
    check.note("; stretch ").note(host.vertex_count()).note("-vertex host: ").note(verdict_name(cert));
  }
}

void criterion_bollobas(Check& check, const SuiteOptions& opt) {
  int tight = 0;
  for (int total = 1; total <= 8; ++total)
    for (int a = 0; a <= total; ++a) {
      const int b = total - a;
      std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
      for (unsigned mask = 0; mask < (1u << total); ++mask) {
        if (__builtin_popcount(mask) != a) continue;
        std::vector<int> in, out;
        for (int x = 0; x < total; ++x) ((mask >> x) & 1 ? in : out).push_back(x);
        pairs.emplace_back(in, out);
      }
      const auto r = bollobas_check(pairs);
      const bool ok = r.conditions_hold && r.n == r.bound && r.bound == binomial(total, a);
      check.expect(ok, "complement family a=" + std::to_string(a) + " b=" + std::to_string(b) + " not tight");
      tight += ok;
    }

  std::mt19937_64 rng(derive_seed(opt.seed, 7));
  int families = 0, largest = 0;
  while (families < 10000) {
    const int a = 1 + static_cast<int>(uniform_below(rng, 4)), b = 1 + static_cast<int>(uniform_below(rng, 4));
    const int ground = a + b + static_cast<int>(uniform_below(rng, 3));
    std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
    for (int attempt = 0; attempt < 40; ++attempt) {
      std::vector<int> items(ground);
      for (int i = 0; i < ground; ++i) items[i] = i;
      shuffle(items, rng);
      std::vector<int> A(items.begin(), items.begin() + a), B(items.begin() + a, items.begin() + a + b);
      auto meets = [](const std::vector<int>& x, const std::vector<int>& y) {
        return std::any_of(x.begin(), x.end(), [&](int e) { return std::find(y.begin(), y.end(), e) != y.end(); });
      };
      bool fits = true;
      for (const auto& [Ai, Bi] : pairs)
        if (!meets(A, Bi) || !meets(Ai, B)) fits = false;
      if (fits) pairs.emplace_back(A, B);
    }
    const auto r = bollobas_check(pairs);
    check.expect(r.conditions_hold, "generated family violates the conditions: " + r.violation);
    check.expect(r.n <= r.bound, "family exceeds C(a+b, a)");
    largest = std::max(largest, r.n);
    ++families;
  }
  check.note(tight).note(" tight complement families; ").note(families).note(" random families, largest N=")
      .note(largest);
}

void criterion_lower_bound(Check& check, const SuiteOptions& opt) {
  const auto start = Clock::now();
  const PartialGadgetColouring p = lower_bound_partial_colouring(2);
  const Graph& g = p.gadget.graph;
  const Pattern c8(cycle_graph(8), "c8");
  const auto copies = enumerate_copies(g, c8);
  check.expect(copies.size() == oracle::copy_edge_sets(cycle_graph(8), g).size(), "C_8 copy count disagrees with oracle");

  std::vector<EdgeColouring> completions;
  if (auto c = complete_to_proper(g, p.colouring)) completions.push_back(*c);
  completions.push_back(oracle::greedy_completion(g, p.colouring));
  for (int i = 0; i < 20; ++i) {
    CompletionOptions co;
    co.seed = derive_seed(opt.seed, 800 + i);
    if (auto c = complete_to_proper(g, p.colouring, co)) completions.push_back(*c);
  }
  check.expect(completions.size() == 22, "some completion attempts failed");
  int rainbow = 0;
  for (const auto& c : completions) {
    check.expect(oracle::is_proper(g, c), "completion is not proper");
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (p.colouring.coloured(e)) check.expect(c.at(e) == p.colouring.at(e), "completion changed a fixed colour");
    for (const Copy& copy : copies) {
      std::set<Colour> colours;
      for (EdgeId e : copy.edges) colours.insert(c.at(e));
      if (colours.size() == 8) ++rainbow;
    }
  }
  check.expect(rainbow == 0, std::to_string(rainbow) + " rainbow C_8 copies");
  within(check, start, 60, "lower-bound colouring");
  check.note(completions.size()).note(" completions x ").note(copies.size()).note(" C_8 copies, ").note(rainbow)
      .note(" rainbow");
}

void criterion_z3(Check& check, const SuiteOptions& opt) {
  const ColouredGraph one = z3_coloured_bipartite(1);
  check.expect(oracle::is_proper(one.graph, one.colouring), "r=1 colouring not proper");
  check.expect(one.colouring.colour_count() == 3, "r=1 does not use 3 colours");
  check.expect(!oracle::has_rainbow_copy(one.graph, one.colouring, complete_bipartite(2, 2)), "r=1 has a rainbow K_{2,2}");

  const ColouredGraph two = z3_coloured_bipartite(2);
  check.expect(oracle::is_proper(two.graph, two.colouring), "r=2 colouring not proper");
  const int side = 9;
  std::mt19937_64 rng(derive_seed(opt.seed, 9));
  int rainbow = 0;
  for (int s = 0; s < 10000; ++s) {
    std::vector<int> left(side), right(side);
    for (int i = 0; i < side; ++i) left[i] = i, right[i] = side + i;
    shuffle(left, rng);
    shuffle(right, rng);
    std::set<Colour> colours;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 4; ++j) colours.insert(two.colouring.at(two.graph.edge_id(left[i], right[j])));
    if (colours.size() == 8) ++rainbow;
  }
  check.expect(rainbow == 0, std::to_string(rainbow) + " rainbow K_{2,4} samples");
  check.note("r=1 exhaustive, r=2 10000 K_{2,4} samples, ").note(rainbow).note(" rainbow");
}

void criterion_oracles(Check& check, const SuiteOptions& opt) {
  int compared = 0;
  for (const auto& inst : forces_corpus()) {
    const Graph g = named_graph(inst.host), h = named_graph(inst.pattern);
    if (g.edge_count() > 8) continue;
    const Mode mode = parse_mode(inst.mode);
    const auto cert = forces(g, Pattern(h), mode);
    const bool expected = oracle::forces(g, h, mode);
    const bool agree = (cert.verdict() == Verdict::forces) == expected && cert.verdict() != Verdict::inconclusive;
    check.expect(agree, "forces disagrees with the oracle on " + inst.host + "/" + inst.pattern + " " + inst.mode);
    if (cert.witness()) check.expect(witness_checks_out(g, h, cert), "bad witness on " + inst.host + "/" + inst.pattern);
    ++compared;
  }
  check.expect(compared >= 20, "fewer than 20 forces instances");

  std::mt19937_64 rng(derive_seed(opt.seed, 10));
  int rainbow_checks = 0;
  const auto corpus = small_corpus();
  for (const auto& host : corpus) {
    if (host.graph.vertex_count() > 12) continue;
    for (const auto& pat : corpus) {
      if (pat.graph.vertex_count() > 6 || pat.graph.vertex_count() > host.graph.vertex_count()) continue;
      const Pattern h(pat.graph, pat.name);
      for (int i = 0; i < 3; ++i) {
        const EdgeColouring c = random_proper_colouring(host.graph, host.graph.max_degree() + 1 + i, rng);
        const bool fast = find_rainbow_copy(host.graph, c, h).has_value();
        check.expect(fast == oracle::has_rainbow_copy(host.graph, c, pat.graph),
                     "rainbow search disagrees on " + host.name + "/" + pat.name);
        ++rainbow_checks;
      }
    }
  }
  check.note(compared).note(" forces instances, ").note(rainbow_checks).note(" rainbow-search comparisons");
}

struct Criterion {
  int id;
  const char* title;
  void (*run)(Check&, const SuiteOptions&);
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "d(3)=1, d(4)=2, d(5)=3", criterion_d_values},
      {2, "AR_d(C_4)=4: K_{2,4} forces; cubic four-colour scheme", criterion_c4},
      {3, "non-monotone gadget", criterion_nonmono},
      {4, "greedy rainbow embedding at the degeneracy bound", criterion_greedy},
      {5, "fractional-width criterion and disjoint representatives", criterion_width},
      {6, "forests: C_5 / P_4, class-2 cubic host, tree embedding", criterion_forests},
      {7, "cross-intersecting pairs bound", criterion_bollobas},
      {8, "lower-bound colouring of G_{8,3}", criterion_lower_bound},
      {9, "Z_3^r colouring of K_{3^r,3^r}", criterion_z3},
      {10, "oracle equivalence", criterion_oracles},
  };
  return all;
}

}  // namespace

std::vector<CriterionResult> run_suite(const SuiteOptions& options, std::ostream& out) {
  std::vector<CriterionResult> results;
  for (const Criterion& c : criteria()) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), c.id) == options.only.end())
      continue;
    const auto start = Clock::now();
    Check check;
    try {
      c.run(check, options);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    CriterionResult r{c.id, c.title, check.failures.empty(), check.notes.str(), seconds_since(start)};
    if (!r.passed) r.detail += (r.detail.empty() ? "" : " | ") + check.failures.front();
    out << (r.passed ? "PASS" : "FAIL") << "  [" << std::setw(2) << r.id << "] " << r.title << " (" << std::fixed
        << std::setprecision(2) << r.seconds << " s): " << r.detail << std::endl;
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace dar::testing
