#include <cmath>

#include "doctest.h"
#include "oa/generators.hpp"
#include "oa/harness.hpp"
#include "oa/structure.hpp"
#include "test_support.hpp"

using namespace oa;
using namespace oa::testing;

TEST_CASE("generators honor their contracts") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto vc = gen_random_vc3(6, seed);
    CHECK(max_degree(vc.graph) <= 3);
    CHECK(is_connected(vc.graph));
    CHECK(vc.k == static_cast<std::size_t>(min_cover_size(vc.graph)));

    const auto mrss = gen_random_mrss(2, 3, 2, seed);
    CHECK_NOTHROW(mrss.validate());
    CHECK(mrss.kprime >= 1);
    CHECK(mrss.kprime <= 3);
    for (std::size_t i = 0; i < 2; ++i) {
      std::uint32_t sum = 0;
      for (const auto& v : mrss.vectors) sum += v[i];
      CHECK(mrss.target[i] >= 1);
      CHECK(mrss.target[i] <= sum);
    }

    const auto phs = gen_random_phs(4, 5, seed);
    CHECK_NOTHROW(phs.validate());
    CHECK(oracle_phs(phs).has_value());

    const auto cs = gen_random_strings(3, 6, 2, seed);
    CHECK(oracle_closest_string(cs).has_value());

    const auto circle = gen_random_circle(6, seed);
    CHECK(min_degree(chord_diagram_to_graph(circle.diagram)) >= 2);

    const auto grid = gen_random_grid_subgraph(3, 3, 0.3, seed);
    CHECK(is_connected(grid.graph));
    CHECK(oracle_dominating_set(grid).has_value());

    const auto oaf = gen_random_oaf(4, 1, 4, seed);
    CHECK(validate_forbidden_structure(oaf.graph, oaf.forbidden).valid());
    CHECK(static_cast<int>(oaf.r) ==
          *min_alliance_size(oaf.graph, 1, to_mask(oaf.forbidden)));
  }
  CHECK(chord_diagram_to_graph(gen_cycle_diagram(4).diagram) == cycle(4));
  CHECK(gen_cycle_diagram(7).k == 3);
  CHECK(gen_grid(3, 3).k == 3);
  CHECK(gen_random_graph(8, 0.5, 3) == gen_random_graph(8, 0.5, 3));
  CHECK_THROWS_AS(gen_random_mrss(2, 40, 2, 1), DeskScaleError);
  CHECK_THROWS_AS(gen_random_phs(20, 2, 1), DeskScaleError);
}

TEST_CASE("generated cases are reproducible") {
  for (const auto& name : reduction_names()) {
    if (name == "mrss-oa") continue;
    const auto a = generate_case(name, 7);
    const auto b = generate_case(name, 7);
    CHECK(a.source == b.source);
    CHECK(a.witness == b.witness);
  }
  CHECK(is_reduction_name("ds-circle"));
  CHECK_FALSE(is_reduction_name("nope"));
  CHECK_THROWS_AS(generate_case("nope", 1), PreconditionError);
  CHECK_THROWS_AS(tier_from_string("sideways"), PreconditionError);
}

TEST_CASE("lift and round-trip tiers pass on generated cases") {
  for (const auto& name : reduction_names()) {
    if (name == "mrss-oa") continue;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto reports = run_checks(generate_case(name, seed), {Tier::lift, Tier::roundtrip});
      for (const auto& r : reports) {
        INFO(name << " seed " << seed << " " << to_json(r).dump());
        CHECK(r.passed());
      }
    }
  }
}

TEST_CASE("a bad witness fails with the violating object") {
  auto c = generate_case("vc-split", 3);
  c.witness = Json::array();
  const auto r = run_lift_check(c);
  CHECK(r.verdict == Verdict::fail);
  CHECK(r.seed == std::uint64_t{3});
  const Json j = to_json(r);
  CHECK(j.at("verdict") == "fail");
  bool located = false;
  for (const auto& d : j.at("details"))
    if (!d.at("ok").get<bool>()) located = true;
  CHECK(located);
}

TEST_CASE("equivalence tier decides or reports budget") {
  SourceCase no{"vc-split", to_json(VcInstance{complete(3), 1, true}), nullptr, std::nullopt};
  const auto r = run_equiv_check(no);
  CHECK(r.verdict == Verdict::pass);
  const auto& d = r.details.back();
  CHECK(d.at("method") == "bruteforce");
  CHECK(d.at("source") == false);
  CHECK(d.at("target") == false);

  const auto phs = run_equiv_check(generate_case("phs-oa", 1));
  CHECK(phs.verdict == Verdict::budget);
  CHECK(run_lift_check(generate_case("phs-oa", 1)).passed());
}

TEST_CASE("enumeration count is the bounded subset sum") {
  AllianceInstance inst;
  inst.graph = cycle(10);
  inst.r = 3;
  inst.forbidden = VertexSet{0};
  inst.necessary = VertexSet{5};
  // Free vertices: 8, sizes 0..2 beyond the necessary one.
  CHECK(enumeration_count(inst) == doctest::Approx(1 + 8 + 28));
  inst.exact = true;
  CHECK(enumeration_count(inst) == doctest::Approx(28));
}

TEST_CASE("suite summary") {
  SuiteOptions s;
  s.reductions = {"vc-bipartite", "ds-circle"};
  s.tiers = {Tier::lift, Tier::roundtrip};
  s.cases = 3;
  const auto report = run_suite(s);
  CHECK(report.reports.size() == 12);
  CHECK(report.passed == 12);
  CHECK(report.failed == 0);
  CHECK_FALSE(report.timed_out);
  CHECK(to_json(report).at("passed") == 12);
}
