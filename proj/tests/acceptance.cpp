// Acceptance run: one PASS/FAIL line per criterion, with wall time and limit.

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oa/generators.hpp"
#include "oa/harness.hpp"
#include "oa/json_io.hpp"
#include "oa/reductions.hpp"
#include "oa/solvers.hpp"
#include "oa/structure.hpp"
#include "test_support.hpp"

using namespace oa;
using namespace oa::testing;

namespace {

constexpr std::size_t kSeedsPerReduction = 50;

const std::vector<std::string> kTen{"mrss-soafn", "collapse", "soafn-oaf",    "oaf-oa",   "phs-oa",
                                    "cs-oa",      "vc-bipartite", "vc-split", "pds-apex", "ds-circle"};

struct Outcome {
  bool ok = true;
  std::string note;
};

class Tally {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (!cond) {
      ++failures_;
      if (first_.empty()) first_ = what;
    }
  }
  Outcome outcome(const std::string& extra = "") const {
    std::ostringstream s;
    s << checks_ << " checks, " << failures_ << " failures";
    if (!extra.empty()) s << "; " << extra;
    if (!first_.empty()) s << "; first: " << first_;
    return {failures_ == 0, s.str()};
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::string first_;
};

int g_failed = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < limit_seconds;
  const bool pass = out.ok && in_time;
  if (!pass) ++g_failed;
  std::printf("%s criterion %d: %s (%.2f s, limit %.0f s) %s%s\n", pass ? "PASS" : "FAIL", id, title, secs,
              limit_seconds, out.note.c_str(), in_time ? "" : " [over time limit]");
  std::fflush(stdout);
}

AllianceInstance plain(const Graph& g, std::size_t r, int strength = 1) {
  AllianceInstance inst;
  inst.graph = g;
  inst.r = r;
  inst.strength = strength;
  return inst;
}

// Chord crossings counted directly from the endpoint sequence.
std::size_t crossing_count(const std::vector<Vertex>& seq) {
  const std::size_t c = seq.size() / 2;
  std::vector<std::vector<std::size_t>> pos(c);
  for (std::size_t i = 0; i < seq.size(); ++i) pos[seq[i]].push_back(i);
  std::size_t count = 0;
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = a + 1; b < c; ++b) {
      const bool b1 = pos[b][0] > pos[a][0] && pos[b][0] < pos[a][1];
      const bool b2 = pos[b][1] > pos[a][0] && pos[b][1] < pos[a][1];
      if (b1 != b2) ++count;
    }
  return count;
}

// Labeled connected graphs on n vertices with maximum degree at most 3.
std::vector<Graph> connected_graphs_max3(std::size_t n) {
  std::vector<Edge> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) slots.push_back({u, v});
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    GraphBuilder b(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1u) b.add_edge(slots[i].first, slots[i].second);
    Graph g = b.build();
    if (is_connected(g) && max_degree(g) <= 3) out.push_back(std::move(g));
  }
  return out;
}

Outcome ground_truth() {
  Tally t;
  struct Named {
    const char* name;
    Graph g;
    std::size_t expected;
  };
  const std::vector<Named> fixtures{{"P3", path(3), 1}, {"K4", complete(4), 2}, {"C5", cycle(5), 3}, {"K1,5", star(5), 1}};
  for (const auto& f : fixtures) {
    const auto enumerated = min_alliance_size(f.g, 1);
    const auto brute = solve_bruteforce(plain(f.g, f.g.order()), SearchBudget{});
    const auto branch = solve_branching(plain(f.g, f.g.order()), SearchBudget{});
    const std::string name = f.name;
    t.expect(enumerated && static_cast<std::size_t>(*enumerated) == f.expected, name + " enumeration");
    t.expect(brute.found() && brute.solution.size() == f.expected, name + " solve_bruteforce");
    t.expect(branch.found() && branch.solution.size() == f.expected, name + " solve_branching");
    t.expect(branch.found() && check_offensive(f.g, branch.solution, 1).valid(), name + " branching witness");
  }
  return t.outcome();
}

Outcome cover_property() {
  Tally t;
  std::mt19937_64 rng(2024);
  std::size_t graphs = 0, strong = 0, covers = 0;
  while (graphs < 200) {
    const std::size_t n = 2 + rng() % 11;
    const Graph g = random_graph(n, 0.2 + 0.5 * static_cast<double>(rng() % 100) / 100.0, rng);
    if (g.size() == 0) continue;
    ++graphs;
    const auto adj = masks(g);
    const std::size_t vc = min_vertex_cover_exact(g, SearchBudget{}).size();
    t.expect(static_cast<int>(vc) == min_cover_size(g), "solver cover size");
    const bool deg2 = min_degree(g) >= 2;
    if (deg2) ++strong;
    // Every minimum cover, not just the one the solver returns.
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      if (static_cast<std::size_t>(std::popcount(s)) != vc || !is_cover_mask(adj, s)) continue;
      ++covers;
      const VertexSet c = from_mask(s);
      t.expect(check_offensive(g, c, 1).valid(), "cover at strength 1");
      if (deg2) t.expect(check_offensive(g, c, 2).valid(), "cover at strength 2");
    }
  }
  return t.outcome(std::to_string(covers) + " minimum covers, " + std::to_string(strong) + " graphs with min degree >= 2");
}

Outcome solver_agreement() {
  Tally t;
  std::mt19937_64 rng(99);
  for (std::size_t i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng() % 9;
    const Graph g = random_graph(n, 0.15 + 0.7 * static_cast<double>(rng() % 100) / 100.0, rng);
    for (std::size_t r = 1; r <= n; ++r) {
      const auto brute = solve_bruteforce(plain(g, r), SearchBudget{});
      const auto branch = solve_branching(plain(g, r), SearchBudget{});
      const std::string where = "graph " + std::to_string(i) + " r=" + std::to_string(r);
      t.expect(brute.status == branch.status, where + " decision");
      if (brute.found() && branch.found()) {
        t.expect(brute.solution.size() == branch.solution.size(), where + " size");
        t.expect(check_offensive(g, branch.solution, 1).valid(), where + " witness");
      }
    }
  }
  return t.outcome();
}

template <class F>
void for_cases(const std::string& reduction, std::size_t count, F&& f) {
  for (std::uint64_t seed = 1; seed <= count; ++seed) f(generate_case(reduction, seed), seed);
}

Outcome formulas() {
  Tally t;
  // Vectors (2,1), (1,1), (1,2); target (3,3); k' = 2.
  MrssInstance three_vectors;
  three_vectors.k = 2;
  three_vectors.kprime = 2;
  three_vectors.vectors = {{2, 1}, {1, 1}, {1, 2}};
  three_vectors.target = {3, 3};
  long long by_hand = 0;
  for (std::size_t i = 0; i < three_vectors.k; ++i) {
    long long colsum = 0;
    for (const auto& v : three_vectors.vectors) colsum += v[i];
    by_hand += 2 * (colsum - three_vectors.target[i] + 1);
  }
  for (const auto& v : three_vectors.vectors) by_hand += 2 * (static_cast<long long>(*std::max_element(v.begin(), v.end())) + 1);
  by_hand += 5 * static_cast<long long>(three_vectors.vectors.size()) + 3 + static_cast<long long>(three_vectors.kprime);
  const auto mrss_out = mrss_to_soafn(three_vectors);
  t.expect(by_hand == 44, "hand evaluation of the MRSS bound");
  t.expect(mrss_out.instance.graph.order() == 98, "MRSS target order");
  t.expect(mrss_out.instance.r == 44, "MRSS target r");

  for_cases("phs-oa", 20, [&](const SourceCase& c, std::uint64_t) {
    const auto inst = phs_from_json(c.source);
    t.expect(phs_to_oa(inst).instance.r == 5 * inst.k, "phs r = 5k");
  });
  for_cases("cs-oa", 20, [&](const SourceCase& c, std::uint64_t) {
    const auto inst = closest_string_from_json(c.source);
    const auto out = closest_string_to_oa(inst);
    const std::size_t n = inst.length(), d = inst.d;
    t.expect(out.instance.r == 4 * n + 2 * d + 1, "cs r = 4n+2d+1");
    t.expect(out.declared_cover && out.declared_cover->size() == 18 * n + 2 * d + 2, "cs cover = 18n+2d+2");
  });
  for_cases("vc-bipartite", 20, [&](const SourceCase& c, std::uint64_t) {
    const auto inst = vc_from_json(c.source);
    t.expect(vc3_to_oa_bipartite(inst).instance.r == inst.k + 5, "vc-bipartite r = k+5");
  });
  for_cases("vc-split", 20, [&](const SourceCase& c, std::uint64_t) {
    const auto inst = vc_from_json(c.source);
    t.expect(vc3_to_oa_split(inst).instance.r == inst.k + inst.graph.size() + 1, "vc-split r = k+m+1");
  });
  for_cases("pds-apex", 20, [&](const SourceCase& c, std::uint64_t) {
    const auto inst = ds_from_json(c.source);
    t.expect(pds_to_soa_apex(inst).instance.r == inst.graph.size() + inst.k + 2, "apex r = m+k+2");
  });
  for_cases("ds-circle", 20, [&](const SourceCase& c, std::uint64_t) {
    const auto inst = circle_ds_from_json(c.source);
    const std::size_t m = crossing_count(inst.diagram.endpoints());
    t.expect(circle_ds_to_oa(inst).instance.r == 2 * m + inst.k, "circle r = 2m+k");
  });
  return t.outcome();
}

Outcome tier_over_cases(Tier tier, bool with_pipeline) {
  Tally t;
  HarnessOptions opts;
  for (const auto& name : kTen)
    for_cases(name, kSeedsPerReduction, [&](const SourceCase& c, std::uint64_t seed) {
      const auto r = run_check(tier, c, opts);
      t.expect(r.passed(), name + " seed " + std::to_string(seed));
    });
  if (with_pipeline) {
    const auto r = run_check(tier, generate_case("mrss-oa", 1), opts);
    t.expect(r.passed(), "mrss-oa pipeline");
  }
  return t.outcome(std::to_string(kTen.size()) + " reductions x " + std::to_string(kSeedsPerReduction) + " seeds" +
                   (with_pipeline ? " + pipeline" : ""));
}

Outcome structural() {
  Tally t;
  std::size_t worst_mrss = 0, worst_stage = 0, worst_pipeline = 0;
  for_cases("mrss-soafn", kSeedsPerReduction, [&](const SourceCase& c, std::uint64_t) {
    const auto inst = mrss_from_json(c.source);
    const auto out = mrss_to_soafn(inst);
    VertexSet expected = out.roles["U"].set();
    expected.insert(out.roles.vertex("a"));
    t.expect(out.modulator == expected, "mrss modulator is U and a");
    const auto h = forest_height_after_deletion(out.instance.graph, expected);
    t.expect(h && *h <= 5, "mrss forest height");
    if (h) worst_mrss = std::max(worst_mrss, *h);
    const auto collapsed = collapse_necessary(out);
    const auto oaf = soafn_to_oaf(collapsed);
    const auto h2 = forest_height_after_deletion(oaf.instance.graph, oaf.modulator);
    t.expect(h2 && *h2 <= 5, "stage forest height");
    t.expect(oaf.modulator.size() == collapsed.modulator.size() + 2, "stage modulator grows by two");
    if (h2) worst_stage = std::max(worst_stage, *h2);
  });
  {
    MrssInstance smallest;
    smallest.k = 1;
    smallest.kprime = 1;
    smallest.vectors = {{1}};
    smallest.target = {1};
    const auto p = mrss_to_oa_pipeline(smallest);
    const auto h = forest_height_after_deletion(p.result().instance.graph, p.result().modulator);
    t.expect(h && *h <= 7, "pipeline forest height");
    if (h) worst_pipeline = *h;
  }
  for_cases("vc-bipartite", kSeedsPerReduction, [&](const SourceCase& c, std::uint64_t) {
    const auto out = vc3_to_oa_bipartite(vc_from_json(c.source));
    t.expect(out.bipartition && verify_bipartition(out.instance.graph, *out.bipartition), "bipartition witness");
  });
  for_cases("vc-split", kSeedsPerReduction, [&](const SourceCase& c, std::uint64_t) {
    const auto out = vc3_to_oa_split(vc_from_json(c.source));
    t.expect(out.split && verify_split_partition(out.instance.graph, *out.split), "split witness");
  });
  auto circle_case = [&](const CircleDsInstance& inst) {
    const auto out = circle_ds_to_oa(inst);
    t.expect(out.diagram && chord_diagram_to_graph(*out.diagram) == out.instance.graph, "circle diagram");
  };
  circle_case(gen_cycle_diagram(4));
  for_cases("ds-circle", kSeedsPerReduction,
            [&](const SourceCase& c, std::uint64_t) { circle_case(circle_ds_from_json(c.source)); });
  for_cases("pds-apex", kSeedsPerReduction, [&](const SourceCase& c, std::uint64_t) {
    const auto out = pds_to_soa_apex(ds_from_json(c.source));
    const Vertex x = out.roles.vertex("x");
    const std::size_t edges = out.instance.graph.size() - out.instance.graph.degree(x);
    const std::size_t vertices = out.instance.graph.order() - 1;
    t.expect(edges + 6 <= 3 * vertices, "apex edge bound");
    t.expect(apex_edge_bound_holds(out), "apex edge bound (library)");
  });
  return t.outcome("heights: mrss " + std::to_string(worst_mrss) + ", stage " + std::to_string(worst_stage) +
                   ", pipeline " + std::to_string(worst_pipeline));
}

Outcome split_equivalence() {
  Tally t;
  HarnessOptions opts;
  opts.equiv_solver = EquivSolver::brute_then_branch;
  std::size_t graphs = 0, instances = 0, brute = 0, branch = 0, no_instances = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const Graph& g : connected_graphs_max3(n)) {
      ++graphs;
      for (std::size_t k = 0; k <= n; ++k) {
        ++instances;
        SourceCase c{"vc-split", to_json(VcInstance{g, k, true}), nullptr, std::nullopt};
        const auto r = run_equiv_check(c, opts);
        t.expect(r.passed(), "n=" + std::to_string(n) + " m=" + std::to_string(g.size()) + " k=" + std::to_string(k));
        for (const auto& d : r.details)
          if (d.value("check", "") == "equivalence") {
            (d.value("method", "") == "bruteforce" ? brute : branch) += 1;
            if (!d.value("source", true)) ++no_instances;
          }
      }
    }
  return t.outcome(std::to_string(graphs) + " graphs, " + std::to_string(instances) + " instances (" +
                   std::to_string(no_instances) + " no), target decided by enumeration " + std::to_string(brute) +
                   ", by branching " + std::to_string(branch));
}

Outcome closest_string_fixture() {
  Tally t;
  ClosestStringInstance inst;
  inst.strings = {"1011100", "1101010", "1110001"};
  inst.d = 3;
  const std::string y = "1000000";
  t.expect(is_central_string(inst, y), "y is central");
  for (const auto& x : inst.strings) t.expect(hamming(x, y) <= 3, "distance to " + x);
  const auto out = closest_string_to_oa(inst);
  const auto lift = lift_closest_string(inst, out, y);
  t.expect(lift.ok(), "lift verifies");
  t.expect(lift.lifted.size() <= out.instance.r, "lift within r");
  t.expect(check_instance_solution(out.instance, lift.lifted).valid(), "lift passes the instance check");
  t.expect(project_closest_string(inst, out, lift.lifted) == y, "projection returns y");
  return t.outcome();
}

}  // namespace

int main() {
  criterion(1, "ground-truth minimum alliances", 1, ground_truth);
  criterion(2, "minimum vertex covers are offensive alliances", 30, cover_property);
  criterion(3, "branching agrees with brute force", 300, solver_agreement);
  criterion(4, "parameter formulas", 60, formulas);
  criterion(5, "lift soundness", 600, [] { return tier_over_cases(Tier::lift, false); });
  criterion(6, "round-trip projection", 600, [] { return tier_over_cases(Tier::roundtrip, true); });
  criterion(7, "structural claims", 600, structural);
  criterion(8, "vc-split equivalence on small graphs", 900, split_equivalence);
  criterion(9, "closest-string fixture", 10, closest_string_fixture);
  std::printf("%s: %d criterion(s) failed\n", g_failed == 0 ? "ALL PASS" : "FAILURES", g_failed);
  return g_failed == 0 ? 0 : 1;
}
