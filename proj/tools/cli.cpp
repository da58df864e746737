#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "dar/certify.hpp"
#include "dar/constructions.hpp"
#include "dar/copies.hpp"
#include "dar/error.hpp"
#include "dar/families.hpp"
#include "dar/io.hpp"
#include "dar/matching.hpp"
#include "dar/rainbow.hpp"
#include "dar/testing/acceptance.hpp"
#include "manifest.hpp"

namespace dar::cli {

namespace {

struct Globals {
  std::uint64_t seed = default_seed;
  int workers = 1;
  std::string manifest_path;
};

// State shared by one invocation: where output goes and what was read/written.
struct Session {
  Globals globals;
  std::ostream& out;
  std::ostream& err;
  RunManifest manifest;

  void input_file(const std::string& path) { manifest.inputs.push_back({path, sha256_file(path)}); }

  void write_artifact(const std::string& path, const std::string& bytes) {
    std::ofstream file(path, std::ios::binary);
    require(file.good(), "cannot write " + path);
    file << bytes;
    file.close();
    manifest.artifacts.push_back({path, sha256_hex(bytes)});
  }
};

struct Resolved {
  std::string name;
  Graph graph;
  std::optional<EdgeColouring> colouring;
};

// Graph argument: an existing file in the text format, or a construction
// spec: gadget:K,D  class2:K  host:<forest file>  random_cubic:N  lower:R
// z3:R, or any named graph.
Resolved resolve_graph(Session& s, const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) {
    s.input_file(spec);
    return {spec, load_graph(spec), std::nullopt};
  }
  static const std::regex shaped(R"(([a-z_0-9]+):(.+))");
  std::smatch m;
  if (!std::regex_match(spec, m, shaped)) return {spec, named_graph(spec), std::nullopt};
  const std::string kind = m[1], arg = m[2];
  auto number = [&](const std::string& text) {
    require(std::regex_match(text, std::regex(R"(\d{1,4})")), "expected a number in '" + spec + "'");
    return std::stoi(text);
  };
  if (kind == "gadget") {
    const auto comma = arg.find(',');
    require(comma != std::string::npos, "gadget spec is gadget:K,D");
    return {spec, gadget(number(arg.substr(0, comma)), number(arg.substr(comma + 1))), std::nullopt};
  }
  if (kind == "class2") return {spec, class2_regular(number(arg)), std::nullopt};
  if (kind == "host") {
    s.input_file(arg);
    return {spec, forest_host(load_graph(arg)), std::nullopt};
  }
  if (kind == "random_cubic") {
    std::mt19937_64 rng(s.globals.seed);
    return {spec, random_bridgeless_cubic(number(arg), rng), std::nullopt};
  }
  if (kind == "lower") {
    auto p = lower_bound_partial_colouring(number(arg));
    return {spec, p.gadget.graph, p.colouring};
  }
  if (kind == "z3") {
    auto z = z3_coloured_bipartite(number(arg));
    return {spec, z.graph, z.colouring};
  }
  throw InvalidInput("unknown graph spec '" + spec + "'");
}

EdgeColouring load_any_colouring(Session& s, const std::string& path, const Graph& g) {
  s.input_file(path);
  if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
    Json j;
    try {
      j = Json::parse(read_file(path));
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
    }
    return colouring_from_json(j, g);
  }
  return load_colouring(path, g);
}

SetFamily load_family(Session& s, const std::string& path) {
  s.input_file(path);
  try {
    return family_from_json(Json::parse(read_file(path)));
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
}

std::string rational_text(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

std::string colouring_text(const Graph& g, const EdgeColouring& c) {
  std::ostringstream out;
  write_colouring(out, g, c);
  return out.str();
}

// --- subcommands -----------------------------------------------------------

struct ConstructArgs {
  std::string spec;
  bool dot = false, json = false;
  std::string out_path, colouring_out;
};

int cmd_construct(Session& s, const ConstructArgs& a) {
  const Resolved r = resolve_graph(s, a.spec);
  std::string text;
  if (a.dot) {
    text = to_dot(r.graph, r.colouring ? &*r.colouring : nullptr);
  } else if (a.json) {
    const StructuralReport rep = structural_report(r.graph);
    Json j;
    j["name"] = r.name;
    j["graph"] = graph_to_json(r.graph);
    const auto g = girth(r.graph);
    j["summary"] = {{"vertices", r.graph.vertex_count()},
                    {"edges", r.graph.edge_count()},
                    {"max_degree", rep.max_degree},
                    {"min_degree", rep.min_degree},
                    {"connected", rep.connected},
                    {"girth", g ? Json(*g) : Json(nullptr)},
                    {"degeneracy", degeneracy(r.graph).value}};
    if (r.colouring) j["colouring"] = colouring_to_json(r.graph, *r.colouring);
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream o;
    write_graph(o, r.graph);
    text = o.str();
  }
  if (!a.out_path.empty())
    s.write_artifact(a.out_path, text);
  else
    s.out << text;
  if (!a.colouring_out.empty()) {
    require(r.colouring.has_value(), a.spec + " carries no colouring");
    s.write_artifact(a.colouring_out, colouring_text(r.graph, *r.colouring));
  }
  s.manifest.outcome = std::to_string(r.graph.vertex_count()) + " vertices, " + std::to_string(r.graph.edge_count()) +
                       " edges";
  return exit_ok;
}

struct ForcesArgs {
  std::string host, pattern, mode = "proper";
  std::optional<std::int64_t> budget;
  std::optional<int> time_limit_ms;
  bool no_restrict = false, json = false;
  std::string out_path, witness_out;
};

int cmd_forces(Session& s, const ForcesArgs& a) {
  const Resolved host = resolve_graph(s, a.host);
  const Pattern h(resolve_graph(s, a.pattern).graph, a.pattern);
  ForcesOptions o;
  o.budget_nodes = a.budget;
  if (a.time_limit_ms) o.time_limit = std::chrono::milliseconds(*a.time_limit_ms);
  o.workers = s.globals.workers;
  o.restrict_to_copies = !a.no_restrict;
  s.manifest.budget_nodes = a.budget;
  const ForcesCertificate cert = forces(host.graph, h, parse_mode(a.mode), o);

  std::string text;
  if (a.json) {
    text = certificate_to_json(host.graph, cert).dump(2) + "\n";
  } else {
    std::ostringstream o2;
    o2 << "verdict: " << to_string(cert.verdict()) << "\nmode: " << to_string(cert.mode())
       << "\nnodes: " << cert.stats().nodes << "\nmax_depth: " << cert.stats().max_depth << "\n";
    if (cert.witness()) o2 << "witness:\n" << colouring_text(host.graph, *cert.witness());
    text = o2.str();
  }
  if (!a.out_path.empty())
    s.write_artifact(a.out_path, text);
  else
    s.out << text;
  if (!a.witness_out.empty() && cert.witness())
    s.write_artifact(a.witness_out, colouring_text(host.graph, *cert.witness()));
  if (!a.json && !a.out_path.empty()) s.out << "verdict: " << to_string(cert.verdict()) << "\n";
  s.manifest.outcome = to_string(cert.verdict());
  return cert.verdict() == Verdict::inconclusive ? exit_inconclusive : exit_ok;
}

struct DkArgs {
  int k = 0, dmax = 6;
  std::optional<std::int64_t> budget;
  bool json = false;
};

int cmd_dk(Session& s, const DkArgs& a) {
  ForcesOptions o;
  o.budget_nodes = a.budget;
  o.workers = s.globals.workers;
  s.manifest.budget_nodes = a.budget;
  const MultiplicitySearch r = smallest_forcing_multiplicity(a.k, a.dmax, o);
  if (a.json) {
    Json runs = Json::array();
    for (const auto& [d, cert] : r.runs)
      runs.push_back({{"d", d}, {"verdict", to_string(cert.verdict())}, {"nodes", cert.stats().nodes}});
    s.out << Json{{"k", a.k}, {"d", r.d ? Json(*r.d) : Json(nullptr)}, {"inconclusive", r.inconclusive}, {"runs", runs}}
                 .dump(2)
          << "\n";
  } else if (r.inconclusive) {
    s.out << "inconclusive at d=" << r.runs.back().first << "\n";
  } else {
    s.out << (r.d ? std::to_string(*r.d) : "none") << "\n";
  }
  s.manifest.outcome = r.inconclusive ? "inconclusive" : (r.d ? "d=" + std::to_string(*r.d) : "none");
  return r.inconclusive ? exit_inconclusive : exit_ok;
}

struct EmbedArgs {
  std::string host, colouring, pattern, method = "search";
  int m = 2;
};

int cmd_embed(Session& s, const EmbedArgs& a) {
  const Resolved host = resolve_graph(s, a.host);
  const EdgeColouring c = load_any_colouring(s, a.colouring, host.graph);
  const Pattern h(resolve_graph(s, a.pattern).graph, a.pattern);
  std::optional<Embedding> e;
  Json extra = Json::object();
  if (a.method == "search") {
    e = find_rainbow_copy(host.graph, c, h);
  } else if (a.method == "tree") {
    e = rainbow_tree_embed(host.graph, c, h);
  } else if (a.method == "greedy" || a.method == "bounded") {
    const int n = host.graph.vertex_count();
    require(host.graph.edge_count() == n * (n - 1) / 2, "greedy embedding needs a complete host");
    const Graph kn = complete_graph(n);
    EdgeColouring on_kn(kn.edge_count());
    for (EdgeId i = 0; i < kn.edge_count(); ++i)
      if (auto col = c[host.graph.edge_id(kn.edge(i).u, kn.edge(i).v)]) on_kn.set(i, *col);
    std::vector<Vertex> map;
    if (a.method == "greedy") {
      map = greedy_rainbow_embed(n, on_kn, h).vertex_map;
    } else {
      auto r = bounded_rainbow_embed(n, on_kn, h, a.m);
      map = r.embedding.vertex_map;
      extra["backtracks"] = r.backtracks;
    }
    e = make_embedding(host.graph, c, h, map);
  } else {
    throw InvalidInput("unknown method '" + a.method + "' (search, greedy, bounded, tree)");
  }
  Json j{{"found", e.has_value()}};
  if (e) j["embedding"] = embedding_to_json(*e);
  j.update(extra);
  s.out << j.dump(2) << "\n";
  s.manifest.outcome = e ? "found" : "none";
  return exit_ok;
}

int cmd_width(Session& s, const std::string& path, bool json) {
  const SetFamily f = load_family(s, path);
  const CoveringSolution sol = fractional_width_solution(f);
  if (json) {
    Json w = Json::array(), y = Json::array();
    for (const auto& x : sol.primal) w.push_back(rational_text(x));
    for (const auto& x : sol.dual) y.push_back(rational_text(x));
    s.out << Json{{"width", rational_text(sol.value)}, {"weights", w}, {"dual", y}, {"pivots", sol.pivots}}.dump(2)
          << "\n";
  } else {
    s.out << rational_text(sol.value) << "\n";
  }
  s.manifest.outcome = "w*=" + rational_text(sol.value);
  return exit_ok;
}

int cmd_sdr(Session& s, const std::string& path, bool json) {
  const SetFamily f = load_family(s, path);
  const auto system = disjoint_representatives(f);
  if (json) {
    Json j{{"found", system.has_value()}};
    if (system) {
      Json sets = Json::array();
      for (int id : *system) sets.push_back(family_to_json(SetFamily{{}, {f.sets[id]}, {}})["sets"][0]);
      j["indices"] = *system;
      j["sets"] = sets;
    }
    s.out << j.dump(2) << "\n";
  } else if (system) {
    for (std::size_t i = 0; i < system->size(); ++i) s.out << (i ? " " : "") << (*system)[i];
    s.out << "\n";
  } else {
    s.out << "none\n";
  }
  s.manifest.outcome = system ? "found" : "none";
  return exit_ok;
}

int cmd_avoid_c4(Session& s, const std::string& spec, const std::string& out_path, bool json) {
  const Resolved host = resolve_graph(s, spec);
  const Graph& g = host.graph;
  const EdgeColouring c = avoid_rainbow_c4_cubic(g);
  const auto matching = perfect_matching(g);
  const auto d = TwoFactorDecomposition::build(g, *matching);
  int copies = 0, rainbow = 0;
  for_each_copy(g, Pattern(cycle_graph(4)), [&](const Copy& copy) {
    std::set<Colour> cs;
    for (EdgeId e : copy.edges) cs.insert(c.at(e));
    ++copies;
    rainbow += cs.size() == 4;
    return true;
  });
  const std::string colouring = colouring_text(g, c);
  if (!out_path.empty()) s.write_artifact(out_path, colouring);
  if (json) {
    Json m = Json::array(), free = Json::array();
    for (const Edge& e : d.matching) m.push_back({e.u, e.v});
    for (int i = 0; i < static_cast<int>(d.cycles.size()); ++i)
      if (d.cycles[i].size() % 2 == 1) {
        const Edge f = odd_cycle_free_edge(d, i);
        free.push_back({f.u, f.v});
      }
    s.out << Json{{"colouring", colouring_to_json(g, c)},
                  {"proper", is_proper(g, c)},
                  {"colours", c.colour_count()},
                  {"c4_copies", copies},
                  {"rainbow_c4", rainbow},
                  {"matching", m},
                  {"cycles", d.cycles},
                  {"free_edges", free}}
                 .dump(2)
          << "\n";
  } else {
    if (out_path.empty()) s.out << colouring;
    s.out << "# proper: " << (is_proper(g, c) ? "yes" : "no") << ", colours: " << c.colour_count()
          << ", rainbow C4: " << rainbow << " of " << copies << "\n";
  }
  s.manifest.outcome = std::to_string(rainbow) + " rainbow C4";
  return exit_ok;
}

int cmd_chromatic_index(Session& s, const std::string& spec, bool json) {
  const Resolved host = resolve_graph(s, spec);
  const int chi = chromatic_index(host.graph);
  const int delta = host.graph.max_degree();
  if (json)
    s.out << Json{{"max_degree", delta}, {"chromatic_index", chi}, {"class", chi == delta ? 1 : 2}}.dump(2) << "\n";
  else
    s.out << chi << "\n";
  s.manifest.outcome = "chi'=" + std::to_string(chi);
  return exit_ok;
}

int cmd_suite(Session& s, const std::string& tier, const std::vector<int>& only) {
  testing::SuiteOptions o;
  require(tier == "fast" || tier == "full", "tier is fast or full");
  o.tier = tier == "full" ? testing::Tier::full : testing::Tier::fast;
  o.seed = s.globals.seed;
  o.workers = s.globals.workers;
  o.only = only;
  const auto results = testing::run_suite(o, s.out);
  int failed = 0;
  for (const auto& r : results) failed += !r.passed;
  s.out << results.size() - failed << "/" << results.size() << " criteria passed\n";
  s.manifest.outcome = std::to_string(results.size() - failed) + "/" + std::to_string(results.size()) + " passed";
  return failed == 0 ? exit_ok : exit_error;
}

int run_capturing(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, RunManifest* record);

int cmd_rerun(Session& s, const std::string& path) {
  s.input_file(path);
  const RunManifest before = RunManifest::from_json(Json::parse(read_file(path)));
  for (const auto& in : before.inputs) {
    const bool same = std::filesystem::is_regular_file(in.path) && sha256_file(in.path) == in.sha256;
    require(same, "input " + in.path + " changed since the recorded run");
  }
  std::ostringstream sink, err_sink;
  RunManifest after;
  const int code = run_capturing(before.command, sink, err_sink, &after);
  std::vector<std::string> diffs;
  if (code != before.exit_code) diffs.push_back("exit code " + std::to_string(code));
  if (after.stdout_sha256 != before.stdout_sha256) diffs.push_back("stdout differs");
  for (const auto& art : before.artifacts) {
    const bool same = std::filesystem::is_regular_file(art.path) && sha256_file(art.path) == art.sha256;
    if (!same) diffs.push_back(art.path + " differs");
  }
  if (diffs.empty()) {
    s.out << "identical: " << before.artifacts.size() << " artifact(s) and stdout reproduced\n";
    s.manifest.outcome = "identical";
    return exit_ok;
  }
  for (const auto& d : diffs) s.out << "mismatch: " << d << "\n";
  s.manifest.outcome = "mismatch";
  return exit_error;
}

int run_capturing(const std::vector<std::string>& args, std::ostream& real_out, std::ostream& err, RunManifest* record) {
  CLI::App app{"Degree anti-Ramsey toolkit: constructions, exhaustive rainbow forcing, embeddings"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--seed", globals.seed, "seed for every random choice")->capture_default_str();
  app.add_option("--workers", globals.workers, "threads for the forcing search")->check(CLI::Range(1, 256));
  app.add_option("--manifest", globals.manifest_path, "write a run manifest (JSON) here");
  app.fallthrough();

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build a named graph or construction");
  construct->add_option("spec", ca.spec, "name, gadget:K,D, class2:K, host:<forest file>, random_cubic:N, lower:R, z3:R")
      ->required();
  construct->add_flag("--dot", ca.dot, "Graphviz output");
  construct->add_flag("--json", ca.json, "JSON output with a structural summary");
  construct->add_option("--out", ca.out_path, "write to a file instead of stdout");
  construct->add_option("--colouring-out", ca.colouring_out, "write the carried colouring (lower:R, z3:R)");

  ForcesArgs fa;
  auto* forces_cmd = app.add_subcommand("forces", "does every colouring of the host contain a rainbow pattern?");
  forces_cmd->add_option("--host", fa.host, "graph file or spec")->required();
  forces_cmd->add_option("--pattern", fa.pattern, "pattern name")->required();
  forces_cmd->add_option("--mode", fa.mode, "proper, m=K or palette=Q")->capture_default_str();
  forces_cmd->add_option("--budget-nodes", fa.budget, "stop after this many search nodes")->check(CLI::NonNegativeNumber);
  forces_cmd->add_option("--time-limit-ms", fa.time_limit_ms, "wall-clock limit (not reproducible)");
  forces_cmd->add_flag("--no-restrict", fa.no_restrict, "search the full host, not only edges lying in copies");
  forces_cmd->add_flag("--json", fa.json, "JSON certificate");
  forces_cmd->add_option("--out", fa.out_path, "write the certificate to a file");
  forces_cmd->add_option("--witness-out", fa.witness_out, "write the witness colouring to a file");

  DkArgs da;
  auto* dk = app.add_subcommand("dk", "least d such that G_{k,d} forces a rainbow C_k");
  dk->add_option("--k", da.k, "cycle length")->required();
  dk->add_option("--dmax", da.dmax, "largest d to try")->capture_default_str();
  dk->add_option("--budget-nodes", da.budget, "node budget per d")->check(CLI::NonNegativeNumber);
  dk->add_flag("--json", da.json);

  EmbedArgs ea;
  auto* embed = app.add_subcommand("embed", "find a rainbow copy of a pattern in a coloured host");
  embed->add_option("--host", ea.host)->required();
  embed->add_option("--colouring", ea.colouring, "colouring file (u v colour lines, or .json)")->required();
  embed->add_option("--pattern", ea.pattern)->required();
  embed->add_option("--method", ea.method, "search, greedy, bounded or tree")->capture_default_str();
  embed->add_option("--m", ea.m, "multiplicity for --method bounded")->capture_default_str();

  std::string family_path;
  bool family_json = false;
  auto* width = app.add_subcommand("width", "exact fractional width of a set family");
  width->add_option("--family", family_path, "family JSON")->required();
  width->add_flag("--json", family_json);
  auto* sdr = app.add_subcommand("sdr", "system of disjoint representatives of a grouped family");
  sdr->add_option("--family", family_path, "family JSON")->required();
  sdr->add_flag("--json", family_json);

  std::string host_spec, out_path;
  bool host_json = false;
  auto* avoid = app.add_subcommand("avoid-c4", "proper colouring of a bridgeless cubic graph without rainbow C_4");
  avoid->add_option("--host", host_spec)->required();
  avoid->add_option("--out", out_path, "write the colouring to a file");
  avoid->add_flag("--json", host_json);
  auto* chi = app.add_subcommand("chromatic-index", "exact chromatic index");
  chi->add_option("--host", host_spec)->required();
  chi->add_flag("--json", host_json);

  std::string tier = "fast";
  std::vector<int> only;
  auto* suite = app.add_subcommand("suite", "run the acceptance criteria");
  suite->add_option("--tier", tier, "fast or full")->capture_default_str();
  suite->add_option("--only", only, "criterion numbers")->delimiter(',');

  std::string manifest_in;
  auto* rerun = app.add_subcommand("rerun", "re-execute a manifest and compare its outputs");
  rerun->add_option("manifest", manifest_in)->required();

  std::vector<std::string> argv_store{"dar"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  std::ostringstream captured;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, real_out, err);
    return code == 0 ? exit_ok : exit_error;
  }

  Session s{globals, captured, err, {}};
  s.manifest.command = args;
  s.manifest.seed = globals.seed;
  int code = exit_error;
  try {
    if (*construct) code = cmd_construct(s, ca);
    else if (*forces_cmd) code = cmd_forces(s, fa);
    else if (*dk) code = cmd_dk(s, da);
    else if (*embed) code = cmd_embed(s, ea);
    else if (*width) code = cmd_width(s, family_path, family_json);
    else if (*sdr) code = cmd_sdr(s, family_path, family_json);
    else if (*avoid) code = cmd_avoid_c4(s, host_spec, out_path, host_json);
    else if (*chi) code = cmd_chromatic_index(s, host_spec, host_json);
    else if (*suite) code = cmd_suite(s, tier, only);
    else if (*rerun) code = cmd_rerun(s, manifest_in);
  } catch (const ParseError& e) {
    real_out << captured.str();
    err << "dar: parse error: " << e.what() << "\n";
    return exit_error;
  } catch (const InvalidInput& e) {
    real_out << captured.str();
    err << "dar: " << e.what() << "\n";
    return exit_error;
  } catch (const InvariantViolation& e) {
    real_out << captured.str();
    err << "dar: internal check failed: " << e.what() << "\n";
    return exit_error;
  } catch (const Json::exception& e) {
    real_out << captured.str();
    err << "dar: " << e.what() << "\n";
    return exit_error;
  }
  const std::string text = captured.str();
  real_out << text;
  s.manifest.exit_code = code;
  s.manifest.stdout_sha256 = sha256_hex(text);
  if (!globals.manifest_path.empty()) {
    std::ofstream file(globals.manifest_path);
    file << s.manifest.to_json().dump(2) << "\n";
    if (!file) {
      err << "dar: cannot write manifest " << globals.manifest_path << "\n";
      return exit_error;
    }
  }
  if (record) *record = s.manifest;
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run_capturing(args, out, err, nullptr);
}

}  // namespace dar::cli
