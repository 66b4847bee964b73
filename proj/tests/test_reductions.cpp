#include <sstream>

#include "doctest.h"
#include "oa/generators.hpp"
#include "oa/reductions.hpp"
#include "oa/solvers.hpp"
#include "test_support.hpp"

using namespace oa;
using namespace oa::testing;

namespace {

MrssInstance three_vectors() {
  MrssInstance inst;
  inst.k = 2;
  inst.kprime = 2;
  inst.vectors = {{2, 1}, {1, 1}, {1, 2}};
  inst.target = {3, 3};
  return inst;
}

std::string edge_text(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

void require_same_output(const ReducedInstance& a, const ReducedInstance& b) {
  CHECK(edge_text(a.instance.graph) == edge_text(b.instance.graph));
  CHECK(a.roles == b.roles);
  CHECK(a.instance.r == b.instance.r);
}

}  // namespace

TEST_CASE("MRSS construction on the three-vector example") {
  const auto inst = three_vectors();
  const auto out = mrss_to_soafn(inst);
  CHECK(out.instance.graph.order() == 98);
  CHECK(out.instance.r == 44);
  CHECK(out.instance.strength == 2);
  CHECK(reevaluate(out.provenance.parameters.back()) == 44);
  CHECK(validate_forbidden_structure(out.instance.graph, out.instance.forbidden).valid());

  VertexSet modulator = out.roles["U"].set();
  modulator.insert(out.roles.vertex("a"));
  CHECK(out.modulator == modulator);
  const auto h = forest_height_after_deletion(out.instance.graph, modulator);
  REQUIRE(h);
  CHECK(*h <= 5);

  const auto lift = lift_mrss(inst, out, {0, 2});
  CHECK(lift.ok());
  CHECK(project_mrss(out, lift.lifted) == std::vector<std::size_t>{0, 2});
  // (2,1) alone misses the target.
  CHECK_FALSE(lift_mrss(inst, out, {0}).ok());
  require_same_output(out, mrss_to_soafn(inst));
}

TEST_CASE("MRSS construction rejects degenerate inputs") {
  auto zero = three_vectors();
  zero.vectors[1] = {0, 0};
  CHECK_THROWS_AS(mrss_to_soafn(zero), PreconditionError);
  auto high = three_vectors();
  high.target = {6, 3};
  CHECK_THROWS_AS(mrss_to_soafn(high), PreconditionError);
  auto ragged = three_vectors();
  ragged.vectors[0] = {1};
  CHECK_THROWS_AS(mrss_to_soafn(ragged), PreconditionError);
}

TEST_CASE("seeded choices change the wiring but not soundness") {
  const auto inst = three_vectors();
  const auto base = mrss_to_soafn(inst);
  bool differs = false;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    ReductionOptions opts;
    opts.seed = seed;
    const auto out = mrss_to_soafn(inst, opts);
    CHECK(out.instance.graph.order() == base.instance.graph.order());
    CHECK(out.instance.r == base.instance.r);
    CHECK(lift_mrss(inst, out, {0, 2}).ok());
    differs = differs || !(out.instance.graph == base.instance.graph);
    require_same_output(out, mrss_to_soafn(inst, opts));
  }
  CHECK(differs);
}

TEST_CASE("collapse and soafn-oaf stages") {
  const auto inst = three_vectors();
  const auto mrss_out = mrss_to_soafn(inst);
  const auto mrss_lift = lift_mrss(inst, mrss_out, {0, 2});

  const auto collapsed = collapse_necessary(mrss_out);
  const std::size_t old_necessary = mrss_out.instance.necessary.size();
  CHECK(collapsed.instance.graph.order() == 98 + 2 + (old_necessary - 1));
  CHECK(collapsed.instance.r == 45);
  CHECK(collapsed.instance.necessary == VertexSet{collapsed.roles.vertex("collapse.y")});
  CHECK(collapsed.modulator.contains(collapsed.roles.vertex("collapse.x")));
  CHECK(collapsed.source_order == 98);
  const auto c_lift = lift_collapse(collapsed, mrss_lift.lifted);
  CHECK(c_lift.ok());
  CHECK(project_to_source(collapsed, c_lift.lifted) == mrss_lift.lifted);

  const auto oaf = soafn_to_oaf(collapsed);
  const std::size_t n = collapsed.instance.graph.order();
  CHECK(oaf.instance.strength == 1);
  CHECK(oaf.instance.necessary.empty());
  CHECK(oaf.roles["oaf.T"].count == 4 * n);
  CHECK(oaf.instance.r == collapsed.instance.r + 4 * n);
  CHECK(oaf.modulator.size() == collapsed.modulator.size() + 2);
  CHECK(validate_forbidden_structure(oaf.instance.graph, oaf.instance.forbidden).valid());
  const auto h = forest_height_after_deletion(oaf.instance.graph, oaf.modulator);
  REQUIRE(h);
  CHECK(*h <= 5);
  const auto o_lift = lift_soafn_oaf(oaf, c_lift.lifted);
  CHECK(o_lift.ok());
  CHECK(project_to_source(oaf, o_lift.lifted) == c_lift.lifted);
}

TEST_CASE("oaf-oa trees and guards") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto src = as_reduced(gen_random_oaf(4, 1 + seed % 2, 4, seed));
    const auto out = oaf_to_oa(src);
    CHECK(out.instance.graph.order() == oaf_to_oa_order(src));
    CHECK(out.instance.forbidden.empty());
    CHECK(out.instance.r == src.instance.r);
    const auto best = solve_bruteforce(src.instance, SearchBudget{});
    REQUIRE(best.found());
    CHECK(lift_oaf_oa(out, best.solution).ok());
  }
  AllianceInstance broken;
  broken.graph = path(3);
  broken.r = 1;
  broken.forbidden = VertexSet{0};
  CHECK_THROWS_AS(oaf_to_oa(as_reduced(broken)), PreconditionError);

  ReductionOptions tiny;
  tiny.max_vertices = 10;
  CHECK_THROWS_AS(oaf_to_oa(as_reduced(gen_random_oaf(4, 1, 4, 1)), tiny), DeskScaleError);
}

TEST_CASE("pipeline projects back exactly") {
  MrssInstance smallest;
  smallest.k = 1;
  smallest.kprime = 1;
  smallest.vectors = {{1}};
  smallest.target = {1};
  const auto p = mrss_to_oa_pipeline(smallest);
  REQUIRE(p.stages.size() == 4);
  CHECK(p.result().instance.forbidden.empty());
  CHECK(p.result().instance.necessary.empty());
  const auto lift = lift_pipeline(smallest, p, {0});
  CHECK(lift.ok());
  CHECK(project_pipeline(p, lift.lifted) == std::vector<std::size_t>{0});
  const auto h = forest_height_after_deletion(p.result().instance.graph, p.result().modulator);
  REQUIRE(h);
  CHECK(*h <= 7);
}

TEST_CASE("permutation hitting set construction") {
  PhsInstance inst{2, {{{0, 1}}}};
  const auto out = phs_to_oa(inst);
  CHECK(out.instance.graph.order() == 202);
  CHECK(out.instance.r == 10);
  CHECK(out.roles.has("w(1,2)"));
  const Permutation p{1, 0};
  const auto lift = lift_phs(out, p);
  CHECK(lift.ok());
  const auto cells = project_phs(out, lift.lifted);
  CHECK(cells == permutation_cells(p));
  CHECK(cells_to_permutation(cells, 2) == p);
  CHECK_FALSE(cells_to_permutation({{0, 1}}, 2));
  // The identity misses the only set.
  CHECK_FALSE(lift_phs(out, {0, 1}).ok());

  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto g = gen_random_phs(3, 4, seed);
    const auto o = phs_to_oa(g);
    CHECK(o.instance.r == 15);
    CHECK(lift_phs(o, *oracle_phs(g)).ok());
  }
}

TEST_CASE("closest string construction") {
  ClosestStringInstance inst{{"01", "11"}, 1};
  const auto out = closest_string_to_oa(inst);
  CHECK(out.instance.graph.order() == 258);
  CHECK(out.instance.r == 11);
  REQUIRE(out.declared_cover);
  CHECK(out.declared_cover->size() == 40);
  CHECK(is_vertex_cover(out.instance.graph, *out.declared_cover));
  const auto lift = lift_closest_string(inst, out, "01");
  CHECK(lift.ok());
  CHECK(project_closest_string(inst, out, lift.lifted) == "01");

  ClosestStringInstance seven_letters{{"1011100", "1101010", "1110001"}, 3};
  const auto out_seven = closest_string_to_oa(seven_letters);
  CHECK(out_seven.instance.r == 4 * 7 + 2 * 3 + 1);
  const auto lift_seven = lift_closest_string(seven_letters, out_seven, "1000000");
  CHECK(lift_seven.ok());
  CHECK(is_central_string(seven_letters, project_closest_string(seven_letters, out_seven, lift_seven.lifted)));
}

TEST_CASE("vertex cover to bipartite target") {
  const VcInstance k2{path(2), 1, true};
  const auto out = vc3_to_oa_bipartite(k2);
  CHECK(out.instance.graph.order() == 130);
  CHECK(out.instance.r == 6);
  REQUIRE(out.bipartition);
  CHECK(verify_bipartition(out.instance.graph, *out.bipartition));
  const auto lift = lift_vc_bipartite(out, VertexSet{0});
  CHECK(lift.ok());
  CHECK(project_vc_bipartite(out, lift.lifted) == VertexSet{0});
  CHECK_THROWS_AS(vc3_to_oa_bipartite(VcInstance{star(4), 1, true}), PreconditionError);
}

TEST_CASE("vertex cover to split target") {
  const VcInstance k3{complete(3), 2, true};
  const auto out = vc3_to_oa_split(k3);
  CHECK(out.instance.graph.order() == 34);
  CHECK(out.instance.graph.size() == 123);
  CHECK(out.instance.r == 2 + 3 + 1);
  REQUIRE(out.split);
  CHECK(verify_split_partition(out.instance.graph, *out.split));
  const auto lift = lift_vc_split(out, VertexSet{0, 1});
  CHECK(lift.ok());
  CHECK(is_vertex_cover(k3.graph, project_vc_split(out, lift.lifted)));

  // An edge vertex standing in for its endpoints projects to a cover.
  const VertexRange ve = out.roles["V_e"];
  VertexSet mixed = out.roles["Y"].set();
  mixed.insert(0);
  mixed.insert(ve[2]);
  // V_e[3] is edge (1,2); neither endpoint is present, so the lower one joins.
  CHECK(project_vc_split(out, mixed) == VertexSet{0, 1});

  // K3 needs two cover vertices, so k = 1 leaves no alliance of size k+m+1 = 5.
  const auto no = vc3_to_oa_split(VcInstance{complete(3), 1, true});
  CHECK(solve_bruteforce(no.instance, SearchBudget{}).status == SolveStatus::none_within_bound);
  CHECK_THROWS_AS(vc3_to_oa_split(VcInstance{star(4), 1, true}), PreconditionError);
}

TEST_CASE("apex construction") {
  const DsInstance c4{cycle(4), 2};
  const auto out = pds_to_soa_apex(c4);
  CHECK(out.instance.graph.order() == 46);
  CHECK(out.instance.r == 8);
  CHECK(out.instance.strength == 2);
  CHECK(out.modulator == VertexSet{out.roles.vertex("x")});
  CHECK(apex_edge_bound_holds(out));
  const auto lift = lift_apex(out, VertexSet{0, 2});
  CHECK(lift.ok());
  CHECK(is_dominating_set(c4.graph, project_apex(out, lift.lifted)));
  CHECK_THROWS_AS(pds_to_soa_apex(DsInstance{make_graph(4, {{0, 1}, {2, 3}}), 2}), PreconditionError);

  const auto grid = gen_grid(3, 3);
  const auto g_out = pds_to_soa_apex(grid);
  CHECK(g_out.instance.r == grid.graph.size() + grid.k + 2);
  CHECK(lift_apex(g_out, *oracle_dominating_set(grid)).ok());
}

TEST_CASE("circle construction") {
  const auto c4 = gen_cycle_diagram(4);
  const auto out = circle_ds_to_oa(c4);
  CHECK(out.instance.graph.order() == 172);
  CHECK(out.instance.r == 10);
  REQUIRE(out.diagram);
  CHECK(chord_diagram_to_graph(*out.diagram) == out.instance.graph);
  const auto lift = lift_circle(out, VertexSet{0, 2});
  CHECK(lift.ok());
  CHECK(project_circle(out, lift.lifted) == VertexSet{0, 2});
  CHECK_THROWS_AS(circle_ds_to_oa(CircleDsInstance{ChordDiagram({0, 1, 0, 1}), 1}), PreconditionError);

  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto inst = gen_random_circle(6, seed);
    const auto o = circle_ds_to_oa(inst);
    CHECK(chord_diagram_to_graph(*o.diagram) == o.instance.graph);
    const auto ds = oracle_dominating_set(DsInstance{chord_diagram_to_graph(inst.diagram), inst.k});
    REQUIRE(ds);
    CHECK(lift_circle(o, *ds).ok());
  }
}

TEST_CASE("exact flag is carried through stages") {
  auto src = gen_random_oaf(4, 1, 4, 3);
  src.exact = true;
  CHECK(oaf_to_oa(as_reduced(src)).instance.exact);
}
