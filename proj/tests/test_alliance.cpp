#include "doctest.h"
#include "oa/alliance.hpp"
#include "test_support.hpp"

using namespace oa;
using namespace oa::testing;

namespace {

bool is_defensive_mask(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
  if (s == 0) return false;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (!(s >> v & 1u)) continue;
    if (std::popcount(adj[v] & s) + 1 < std::popcount(adj[v] & ~s)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("offensive check matches the bitmask definition") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 1 + rng() % 8;
    const Graph g = random_graph(n, 0.45, rng);
    const auto adj = masks(g);
    for (std::uint32_t s = 0; s < (1u << n); ++s)
      for (int strength : {1, 2}) {
        const auto report = check_offensive(g, from_mask(s), strength);
        REQUIRE(report.valid() == is_offensive_mask(adj, s, strength));
      }
  }
}

TEST_CASE("defensive check matches the bitmask definition") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 1 + rng() % 8;
    const Graph g = random_graph(n, 0.45, rng);
    const auto adj = masks(g);
    for (std::uint32_t s = 0; s < (1u << n); ++s) REQUIRE(check_defensive(g, from_mask(s)).valid() == is_defensive_mask(adj, s));
  }
}

TEST_CASE("violations name the vertex and its degrees") {
  // P3 with S = {0}: vertex 1 has one neighbor in S and one outside.
  const auto report = check_offensive(path(3), VertexSet{0}, 1);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0] == DegreeViolation{1, 1, 1, 1});
  CHECK(check_offensive(path(3), VertexSet{1}, 1).valid());
  CHECK(check_offensive(path(3), {}, 1).has(ConstraintKind::empty_set));
  CHECK(boundary(path(4), VertexSet{1}) == VertexSet{0, 2});
}

TEST_CASE("instance constraints") {
  AllianceInstance inst;
  inst.graph = star(4);
  inst.r = 2;
  inst.forbidden = VertexSet{0};
  CHECK(check_instance_solution(inst, VertexSet{0}).has(ConstraintKind::forbidden));
  CHECK(check_instance_solution(inst, VertexSet{1, 2, 3}).has(ConstraintKind::size));
  CHECK(check_instance_solution(inst, VertexSet{9}).has(ConstraintKind::out_of_range));

  inst.forbidden = {};
  inst.necessary = VertexSet{1};
  CHECK(check_instance_solution(inst, VertexSet{0}).has(ConstraintKind::necessary));
  CHECK(check_instance_solution(inst, VertexSet{0, 1}).valid());

  inst.exact = true;
  inst.r = 3;
  CHECK(check_instance_solution(inst, VertexSet{0, 1}).has(ConstraintKind::exactness));

  inst.forbidden = VertexSet{1};
  CHECK_THROWS_AS(inst.validate(), PreconditionError);
  inst.forbidden = VertexSet{7};
  inst.necessary = {};
  CHECK_THROWS_AS(inst.validate(), PreconditionError);
}

TEST_CASE("strength two needs two more inside neighbors") {
  const Graph k4 = complete(4);
  CHECK(check_offensive(k4, VertexSet{0, 1}, 1).valid());
  CHECK_FALSE(check_offensive(k4, VertexSet{0, 1}, 2).valid());
  CHECK(check_offensive(k4, VertexSet{0, 1, 2}, 2).valid());
}

TEST_CASE("forbidden structure") {
  // Hub 1 with pendant 0, hub joined to 2.
  const Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(validate_forbidden_structure(g, VertexSet{0, 1}).valid());
  // Pendant without a forbidden neighbor.
  CHECK(validate_forbidden_structure(g, VertexSet{0}).has(ConstraintKind::forbidden_structure));
  // Higher-degree forbidden vertex without a forbidden pendant.
  CHECK(validate_forbidden_structure(g, VertexSet{2}).has(ConstraintKind::forbidden_structure));
  CHECK(validate_forbidden_structure(g, {}).valid());
}
