#include "oa/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "oa/errors.hpp"
#include "oa/solvers.hpp"
#include "oa/structure.hpp"

namespace oa {

namespace {

constexpr int kMaxAttempts = 10'000;

bool coin(std::mt19937_64& rng, double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Graph sample_gnp(std::size_t n, double p, std::mt19937_64& rng) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng, p)) b.add_edge(u, v);
  return b.build();
}

std::size_t domination_number(const Graph& g) {
  DsInstance probe{g, g.order()};
  return oracle_dominating_set(probe)->size();
}

[[noreturn]] void give_up(const char* what) {
  throw PreconditionError(std::string(what) + ": no acceptable sample within the attempt limit");
}

}  // namespace

Graph gen_random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_gnp(n, p, rng);
}

VcInstance gen_random_vc3(std::size_t n, std::uint64_t seed) {
  if (n > caps::kGraphOrder) throw DeskScaleError("vc3 generator limited to " + std::to_string(caps::kGraphOrder));
  std::mt19937_64 rng(seed);
  const double p = n <= 1 ? 0.0 : std::min(1.0, 2.2 / static_cast<double>(n - 1));
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Graph g = sample_gnp(n, p, rng);
    if (n == 0 || max_degree(g) > 3 || !is_connected(g)) continue;
    const std::size_t k = min_vertex_cover_exact(g, SearchBudget{}).size();
    return VcInstance{std::move(g), k, true};
  }
  give_up("gen_random_vc3");
}

MrssInstance gen_random_mrss(std::size_t k, std::size_t n, std::uint32_t max_entry, std::uint64_t seed) {
  if (k == 0 || n == 0 || max_entry == 0) throw PreconditionError("gen_random_mrss needs k, n, max_entry >= 1");
  if (k > caps::kMrssDimensions || n > caps::kMrssVectors || max_entry > caps::kMrssEntry)
    throw DeskScaleError("MRSS generator exceeds the oracle caps");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    MrssInstance inst;
    inst.k = k;
    inst.vectors.assign(n, IntVector(k, 0));
    for (auto& v : inst.vectors)
      for (auto& x : v) x = static_cast<std::uint32_t>(uniform(rng, 0, max_entry));
    const bool zero_vector = std::any_of(inst.vectors.begin(), inst.vectors.end(), [](const IntVector& v) {
      return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
    });
    if (zero_vector) continue;
    inst.target.assign(k, 0);
    bool zero_column = false;
    for (std::size_t i = 0; i < k; ++i) {
      std::uint32_t sum = 0;
      for (const auto& v : inst.vectors) sum += v[i];
      if (sum == 0) zero_column = true;
      else inst.target[i] = static_cast<std::uint32_t>(uniform(rng, 1, sum));
    }
    if (zero_column) continue;
    inst.kprime = uniform(rng, 1, n);
    return inst;
  }
  give_up("gen_random_mrss");
}

PhsInstance gen_random_phs(std::size_t k, std::size_t sets, std::uint64_t seed, bool planted) {
  if (k == 0) throw PreconditionError("gen_random_phs needs k >= 1");
  if (k > caps::kPhsSide) throw DeskScaleError("PHS generator limited to k <= " + std::to_string(caps::kPhsSide));
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> hidden(k);
  std::iota(hidden.begin(), hidden.end(), 0u);
  std::shuffle(hidden.begin(), hidden.end(), rng);
  PhsInstance inst;
  inst.k = k;
  for (std::size_t f = 0; f < sets; ++f) {
    std::vector<std::uint32_t> rows(k);
    std::iota(rows.begin(), rows.end(), 0u);
    std::shuffle(rows.begin(), rows.end(), rng);
    rows.resize(uniform(rng, 1, k));
    std::sort(rows.begin(), rows.end());
    const std::size_t anchor = uniform(rng, 0, rows.size() - 1);
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto col = (planted && i == anchor) ? hidden[rows[i]] : static_cast<std::uint32_t>(uniform(rng, 0, k - 1));
      cells.push_back({rows[i], col});
    }
    inst.family.push_back(std::move(cells));
  }
  return inst;
}

ClosestStringInstance gen_random_strings(std::size_t k, std::size_t n, std::size_t d, std::uint64_t seed,
                                         bool planted) {
  if (n > caps::kStringLength) throw DeskScaleError("string generator limited to length " + std::to_string(caps::kStringLength));
  std::mt19937_64 rng(seed);
  auto random_string = [&] {
    std::string s(n, '0');
    for (auto& c : s) c = coin(rng, 0.5) ? '1' : '0';
    return s;
  };
  ClosestStringInstance inst;
  inst.d = d;
  const std::string center = random_string();
  for (std::size_t i = 0; i < k; ++i) {
    if (!planted) {
      inst.strings.push_back(random_string());
      continue;
    }
    std::string s = center;
    std::vector<std::size_t> pos(n);
    std::iota(pos.begin(), pos.end(), 0);
    std::shuffle(pos.begin(), pos.end(), rng);
    const std::size_t flips = uniform(rng, 0, std::min(d, n));
    for (std::size_t j = 0; j < flips; ++j) s[pos[j]] = s[pos[j]] == '0' ? '1' : '0';
    inst.strings.push_back(std::move(s));
  }
  return inst;
}

CircleDsInstance gen_cycle_diagram(std::size_t n) {
  if (n < 3) throw PreconditionError("gen_cycle_diagram needs n >= 3");
  std::vector<Vertex> endpoints(2 * n);
  for (Vertex i = 0; i < n; ++i) {
    endpoints[2 * i] = i;
    endpoints[(2 * i + 3) % (2 * n)] = i;
  }
  return CircleDsInstance{ChordDiagram(std::move(endpoints)), (n + 2) / 3};
}

CircleDsInstance gen_random_circle(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw PreconditionError("gen_random_circle needs n >= 3");
  if (n > caps::kGraphOrder) throw DeskScaleError("circle generator limited to " + std::to_string(caps::kGraphOrder));
  std::mt19937_64 rng(seed);
  std::vector<Vertex> endpoints(2 * n);
  for (Vertex i = 0; i < 2 * n; ++i) endpoints[i] = i / 2;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::shuffle(endpoints.begin(), endpoints.end(), rng);
    ChordDiagram cd(endpoints);
    const Graph g = chord_diagram_to_graph(cd);
    if (min_degree(g) < 2) continue;
    return CircleDsInstance{std::move(cd), domination_number(g)};
  }
  give_up("gen_random_circle");
}

DsInstance gen_grid(std::size_t w, std::size_t h) {
  if (w == 0 || h == 0) throw PreconditionError("gen_grid needs positive sides");
  GraphBuilder b(w * h);
  for (std::size_t y = 0; y < h; ++y)
    for (std::size_t x = 0; x < w; ++x) {
      const auto v = static_cast<Vertex>(y * w + x);
      if (x + 1 < w) b.add_edge(v, v + 1);
      if (y + 1 < h) b.add_edge(v, static_cast<Vertex>(v + w));
    }
  Graph g = b.build();
  const std::size_t k = domination_number(g);
  return DsInstance{std::move(g), k};
}

DsInstance gen_random_grid_subgraph(std::size_t w, std::size_t h, double p, std::uint64_t seed) {
  if (w == 0 || h == 0) throw PreconditionError("grid generator needs positive sides");
  std::mt19937_64 rng(seed);
  const Graph grid = gen_grid(w, h).graph;
  auto edges = grid.edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  // Kruskal with random order yields a random spanning tree.
  std::vector<Vertex> parent(grid.order());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  GraphBuilder b(grid.order());
  for (const auto& [u, v] : edges) {
    const Vertex ru = find(u), rv = find(v);
    if (ru != rv) {
      parent[ru] = rv;
      b.add_edge(u, v);
    } else if (coin(rng, p)) {
      b.add_edge(u, v);
    }
  }
  Graph g = b.build();
  const std::size_t k = domination_number(g);
  return DsInstance{std::move(g), k};
}

AllianceInstance gen_random_oaf(std::size_t n, std::size_t pairs, std::size_t max_r, std::uint64_t seed) {
  if (n == 0) throw PreconditionError("gen_random_oaf needs a non-empty core");
  if (n + 2 * pairs > caps::kGraphOrder) throw DeskScaleError("OA^F generator exceeds the oracle cap");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const Graph core = sample_gnp(n, 0.5, rng);
    if (!is_connected(core)) continue;
    GraphBuilder b(n + 2 * pairs);
    b.add_graph(core);
    std::vector<Vertex> forbidden;
    for (std::size_t i = 0; i < pairs; ++i) {
      const auto hub = static_cast<Vertex>(n + 2 * i), pendant = static_cast<Vertex>(hub + 1);
      b.add_edge(hub, pendant);
      const std::size_t links = uniform(rng, 1, std::min<std::size_t>(2, n));
      std::vector<Vertex> targets(n);
      std::iota(targets.begin(), targets.end(), 0u);
      std::shuffle(targets.begin(), targets.end(), rng);
      for (std::size_t j = 0; j < links; ++j) b.add_edge(hub, targets[j]);
      forbidden.push_back(hub);
      forbidden.push_back(pendant);
    }
    AllianceInstance inst;
    inst.graph = b.build();
    inst.forbidden = VertexSet(std::move(forbidden));
    inst.r = max_r;
    const SolveOutcome best = solve_bruteforce(inst, SearchBudget{});
    if (!best.found()) continue;
    inst.r = best.solution.size();
    return inst;
  }
  give_up("gen_random_oaf");
}

}  // namespace oa
