#include <random>

#include "doctest.h"
#include "oa/errors.hpp"
#include "oa/solvers.hpp"
#include "oa/structure.hpp"
#include "test_support.hpp"

using namespace oa;
using namespace oa::testing;

namespace {

AllianceInstance plain(Graph g, std::size_t r, int strength = 1) {
  AllianceInstance inst;
  inst.graph = std::move(g);
  inst.r = r;
  inst.strength = strength;
  return inst;
}

const SearchBudget kBudget{};

}  // namespace

TEST_CASE("brute force on small named graphs") {
  auto k4 = solve_bruteforce(plain(complete(4), 2), kBudget);
  REQUIRE(k4.found());
  CHECK(k4.solution.size() == 2);

  CHECK(solve_bruteforce(plain(cycle(5), 2), kBudget).status == SolveStatus::none_within_bound);
  auto c5 = solve_bruteforce(plain(cycle(5), 3), kBudget);
  REQUIRE(c5.found());
  CHECK(c5.solution == VertexSet{0, 1, 3});

  auto k1 = solve_bruteforce(plain(complete(1), 1), kBudget);
  REQUIRE(k1.found());
  CHECK(k1.solution == VertexSet{0});
}

TEST_CASE("brute force returns the lexicographically least minimum") {
  // Every alliance of P4 is compared against the returned one.
  auto g = path(4);
  auto out = solve_bruteforce(plain(g, 4), kBudget);
  REQUIRE(out.found());
  auto adj = masks(g);
  for (std::uint32_t s = 1; s < 16; ++s) {
    if (!is_offensive_mask(adj, s, 1)) continue;
    auto set = from_mask(s);
    CHECK(set.size() >= out.solution.size());
    if (set.size() == out.solution.size()) CHECK_FALSE(set.items() < out.solution.items());
  }
}

TEST_CASE("branching on small named graphs") {
  auto p3 = solve_branching(plain(path(3), 1), kBudget);
  REQUIRE(p3.found());
  CHECK(p3.solution == VertexSet{1});
  CHECK(solve_branching(plain(path(3), 0), kBudget).status == SolveStatus::none_within_bound);
  CHECK(solve_bruteforce(plain(path(3), 0), kBudget).status == SolveStatus::none_within_bound);
}

TEST_CASE("branching and brute force agree with the bitmask oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 1 + trial % 9;
    double p = 0.2 + 0.1 * (trial % 6);
    auto g = random_graph(n, p, rng);
    for (int strength : {1, 2}) {
      auto best = min_alliance_size(g, strength);
      for (std::size_t r = 1; r <= n; ++r) {
        auto inst = plain(g, r, strength);
        auto brute = solve_bruteforce(inst, kBudget);
        auto branch = solve_branching(inst, kBudget);
        bool expect = best && static_cast<std::size_t>(*best) <= r;
        CHECK(brute.found() == expect);
        CHECK(branch.found() == expect);
        if (expect) {
          CHECK(brute.solution.size() == static_cast<std::size_t>(*best));
          CHECK(branch.solution.size() == static_cast<std::size_t>(*best));
          CHECK(is_offensive_mask(masks(g), to_mask(branch.solution), strength));
        }
      }
    }
  }
}

TEST_CASE("forbidden, necessary and exact constraints") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 3 + trial % 6;
    auto g = random_graph(n, 0.45, rng);
    std::uint32_t forbidden = 0, necessary = 0;
    for (Vertex v = 0; v < n; ++v) {
      int role = pick(rng);
      if (role == 1 && trial % 3 != 0) forbidden |= 1u << v;
      if (role == 2 && trial % 4 == 0) necessary |= 1u << v;
    }
    forbidden &= ~necessary;
    AllianceInstance inst = plain(g, n, 1 + trial % 2);
    inst.forbidden = from_mask(forbidden);
    inst.necessary = from_mask(necessary);
    auto adj = masks(g);
    for (std::size_t r = 1; r <= n; ++r) {
      inst.r = r;
      for (bool exact : {false, true}) {
        inst.exact = exact;
        bool expect = false;
        for (std::uint32_t s = 1; s < (1u << n); ++s) {
          if ((s & forbidden) || (s & necessary) != necessary) continue;
          auto size = static_cast<std::size_t>(std::popcount(s));
          if (exact ? size != r : size > r) continue;
          if (is_offensive_mask(adj, s, inst.strength)) {
            expect = true;
            break;
          }
        }
        auto brute = solve_bruteforce(inst, kBudget);
        auto branch = solve_branching(inst, kBudget);
        CHECK(brute.found() == expect);
        CHECK(branch.found() == expect);
        if (branch.found()) CHECK(check_instance_solution(inst, branch.solution).valid());
        if (brute.found()) CHECK(check_instance_solution(inst, brute.solution).valid());
      }
    }
  }
}

TEST_CASE("budget exhaustion is reported") {
  SearchBudget tiny{3, 60.0};
  CHECK(solve_bruteforce(plain(cycle(12), 6), tiny).status == SolveStatus::budget_exhausted);
  CHECK(solve_branching(plain(cycle(12), 6), tiny).status == SolveStatus::budget_exhausted);
  CHECK_THROWS_AS(min_vertex_cover_exact(complete(10), tiny), BudgetExhaustedError);
  CHECK_THROWS_AS(SearchBudget({0, 1.0}).validate(), PreconditionError);
}

TEST_CASE("minimum vertex cover") {
  CHECK(min_vertex_cover_exact(complete(3), kBudget).size() == 2);
  CHECK(min_vertex_cover_exact(path(3), kBudget) == VertexSet{1});
  CHECK(min_vertex_cover_exact(cycle(5), kBudget).size() == 3);
  CHECK(min_vertex_cover_exact(make_graph(3, {}), kBudget).empty());

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_graph(2 + trial % 11, 0.35, rng);
    auto cover = min_vertex_cover_exact(g, kBudget);
    CHECK(is_vertex_cover(g, cover));
    CHECK(static_cast<int>(cover.size()) == min_cover_size(g));
  }
}

TEST_CASE("alliance via vertex cover bound") {
  auto k3 = solve_via_vertex_cover(complete(3), kBudget);
  REQUIRE(k3.found());
  CHECK(k3.solution.size() == 2);
  auto k15 = solve_via_vertex_cover(star(5), kBudget);
  REQUIRE(k15.found());
  CHECK(k15.solution.size() == 1);
  auto c5 = solve_via_vertex_cover(cycle(5), kBudget);
  REQUIRE(c5.found());
  CHECK(c5.solution.size() == 3);
  auto edgeless = solve_via_vertex_cover(make_graph(2, {}), kBudget);
  REQUIRE(edgeless.found());
  CHECK(edgeless.solution.size() == 1);
  CHECK_THROWS_AS(solve_via_vertex_cover(Graph{}, kBudget), PreconditionError);
}

TEST_CASE("solvers are deterministic") {
  std::mt19937_64 rng(5);
  auto g = random_graph(9, 0.4, rng);
  auto a = solve_branching(plain(g, 9), kBudget);
  auto b = solve_branching(plain(g, 9), kBudget);
  CHECK(a.solution == b.solution);
  CHECK(a.work == b.work);
}
