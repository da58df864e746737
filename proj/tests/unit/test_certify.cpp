#include <doctest.h>

#include "dar/error.hpp"
#include "dar/certify.hpp"
#include "dar/constructions.hpp"
#include "dar/testing/acceptance.hpp"
#include "dar/testing/oracles.hpp"

using namespace dar;

TEST_CASE("modes print and parse") {
  for (const Mode m : {Mode::proper(), Mode::m_bounded(3), Mode::palette_limited(5)})
    CHECK(parse_mode(to_string(m)) == m);
  CHECK(to_string(Mode::m_bounded(2)) == "m=2");
  CHECK_THROWS_AS(parse_mode("palette"), InvalidInput);
  CHECK_THROWS_AS(parse_mode("m=0"), InvalidInput);
}

TEST_CASE("forcing verdicts agree with partition enumeration") {
  int compared = 0;
  for (const auto& inst : testing::forces_corpus()) {
    const Graph g = named_graph(inst.host);
    if (g.edge_count() > 10) continue;
    CAPTURE(inst.host);
    CAPTURE(inst.pattern);
    CAPTURE(inst.mode);
    const Mode mode = parse_mode(inst.mode);
    const auto cert = forces(g, Pattern(named_graph(inst.pattern)), mode);
    REQUIRE(cert.verdict() != Verdict::inconclusive);
    CHECK((cert.verdict() == Verdict::forces) == oracle::forces(g, named_graph(inst.pattern), mode));
    ++compared;
  }
  CHECK(compared >= 10);
}

TEST_CASE("witnesses are admitted and rainbow-free") {
  const Graph g = gadget(5, 2);
  const Pattern h(cycle_graph(5));
  const auto cert = forces(g, h, Mode::proper());
  REQUIRE(cert.verdict() == Verdict::witness_found);
  CHECK(is_proper(g, *cert.witness()));
  CHECK_FALSE(oracle::has_rainbow_copy(g, *cert.witness(), h.graph()));
}

TEST_CASE("certificates do not depend on the worker count") {
  const Graph g = gadget(5, 3);
  const Pattern h(cycle_graph(5));
  for (std::optional<std::int64_t> budget : {std::optional<std::int64_t>{}, std::optional<std::int64_t>{500},
                                             std::optional<std::int64_t>{5000}}) {
    ForcesOptions one;
    one.budget_nodes = budget;
    const auto base = forces(g, h, Mode::proper(), one);
    for (int w : {2, 4, 7}) {
      ForcesOptions many = one;
      many.workers = w;
      const auto other = forces(g, h, Mode::proper(), many);
      CHECK(other.verdict() == base.verdict());
      CHECK(other.stats().nodes == base.stats().nodes);
      CHECK(other.witness() == base.witness());
    }
  }
}

TEST_CASE("witness choice is stable across workers") {
  const Graph g = named_graph("nonmono");
  const Pattern h(named_graph("c4"));
  const auto base = forces(g, h, Mode::proper());
  ForcesOptions many;
  many.workers = 4;
  CHECK(forces(g, h, Mode::proper(), many).witness() == base.witness());
}

TEST_CASE("budget exhaustion is inconclusive") {
  ForcesOptions o;
  o.budget_nodes = 10;
  const auto cert = forces(gadget(5, 3), Pattern(cycle_graph(5)), Mode::proper(), o);
  CHECK(cert.verdict() == Verdict::inconclusive);
  CHECK(cert.stats().nodes == 10);
  CHECK_FALSE(cert.witness().has_value());
}

TEST_CASE("restriction does not change the verdict") {
  const Graph g = disjoint_union(complete_graph(4), path_graph(3));
  const Pattern h(cycle_graph(4));
  ForcesOptions full;
  full.restrict_to_copies = false;
  const auto a = forces(g, h, Mode::proper());
  const auto b = forces(g, h, Mode::proper(), full);
  CHECK(a.verdict() == b.verdict());
  CHECK(a.verdict() == Verdict::witness_found);
  CHECK(is_proper(g, *a.witness()));
}

TEST_CASE("certificates refuse a bogus witness") {
  const Graph g = complete_graph(4);
  const Pattern h(cycle_graph(4));
  const auto mono = EdgeColouring::total(std::vector<Colour>(6, 1));
  CHECK_THROWS_AS(ForcesCertificate::make(g, h, Mode::proper(), Verdict::witness_found, mono, {}, std::nullopt),
                  InvariantViolation);
}

TEST_CASE("least forcing multiplicity for four-cycles") {
  const auto r = smallest_forcing_multiplicity(4, 4);
  CHECK_FALSE(r.inconclusive);
  CHECK(r.d == 2);
}

TEST_CASE("known forced pairs") {
  for (const auto& name : fc_membership_names()) {
    CAPTURE(name);
    // K_4 has no bull at all, so any colouring is a witness.
    const Verdict expected = name == "bull_via_k4" ? Verdict::witness_found : Verdict::forces;
    CHECK(fc_membership_check(name).verdict() == expected);
  }
  CHECK_THROWS_AS(fc_membership_check("nope"), InvalidInput);
}

TEST_CASE("upper certificate reports host size") {
  const auto u = ar_d_upper_certificate(Pattern(path_graph(4)), cycle_graph(5));
  CHECK(u.certificate.verdict() == Verdict::forces);
  CHECK(u.degree_bound == 2);
  CHECK(u.size_bound == 5);
}
