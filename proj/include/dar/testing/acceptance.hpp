#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "dar/graph.hpp"
#include "dar/random.hpp"

namespace dar::testing {

enum class Tier { fast, full };

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct SuiteOptions {
  Tier tier = Tier::fast;
  std::uint64_t seed = default_seed;
  int workers = 1;
  std::vector<int> only;  // criterion ids; empty means all
};

/// Runs the acceptance criteria in order and prints one PASS/FAIL line each.
std::vector<CriterionResult> run_suite(const SuiteOptions& options, std::ostream& out);

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Small graphs shared by the oracle comparisons.
std::vector<NamedGraph> small_corpus();

/// Host/pattern/mode triples with at most 8 host edges.
struct ForcesInstance {
  std::string host;
  std::string pattern;
  std::string mode;
};
std::vector<ForcesInstance> forces_corpus();

/// Deterministic sub-seed for a labelled stream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace dar::testing
