#include "oa/structure.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <vector>

namespace oa {

std::optional<Bipartition> is_bipartite(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::int8_t> color(n, -1);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.clear();
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      for (Vertex v : g.neighbors(u)) {
        if (color[v] == -1) {
          color[v] = static_cast<std::int8_t>(1 - color[u]);
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Vertex> left, right;
  for (Vertex v = 0; v < n; ++v) (color[v] == 0 ? left : right).push_back(v);
  return Bipartition{VertexSet(std::move(left)), VertexSet(std::move(right))};
}

namespace {

bool is_partition_of(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.size() + b.size() != g.order()) return false;
  if (!set_intersection(a, b).empty()) return false;
  if (!a.empty() && a.back() >= g.order()) return false;
  if (!b.empty() && b.back() >= g.order()) return false;
  return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (Vertex u : s)
    for (Vertex v : g.neighbors(u))
      if (s.contains(v)) return false;
  return true;
}

}  // namespace

bool verify_bipartition(const Graph& g, const Bipartition& p) {
  return is_partition_of(g, p.left, p.right) && is_independent(g, p.left) &&
         is_independent(g, p.right);
}

bool verify_split_partition(const Graph& g, const SplitPartition& p) {
  if (!is_partition_of(g, p.clique, p.independent)) return false;
  const auto& c = p.clique.items();
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!g.adjacent(c[i], c[j])) return false;
  return is_independent(g, p.independent);
}

std::optional<SplitPartition> is_split(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

  // m = max{ i : d_i >= i - 1 } over the nonincreasing degree sequence (1-based).
  std::size_t m = 0;
  for (std::size_t i = 1; i <= n; ++i)
    if (g.degree(order[i - 1]) + 1 >= i) m = i;

  std::size_t head = 0, tail = 0;
  for (std::size_t i = 0; i < n; ++i) (i < m ? head : tail) += g.degree(order[i]);
  if (head != m * (m == 0 ? 0 : m - 1) + tail) return std::nullopt;

  SplitPartition p{VertexSet(std::vector<Vertex>(order.begin(), order.begin() + m)),
                   VertexSet(std::vector<Vertex>(order.begin() + m, order.end()))};
  if (!verify_split_partition(g, p)) return std::nullopt;
  return p;
}

std::optional<std::size_t> forest_height_after_deletion(const Graph& g, const VertexSet& removed) {
  const std::size_t n = g.order();
  constexpr std::uint32_t kUnseen = 0xffffffffu;
  std::vector<std::uint8_t> gone(n, 0);
  for (Vertex v : removed) {
    if (v >= n) throw PreconditionError("deletion set contains a vertex outside the graph");
    gone[v] = 1;
  }

  std::vector<std::uint32_t> dist(n, kUnseen);
  std::vector<Vertex> queue;
  std::size_t best = 0;

  // BFS from `s` inside its component; returns the farthest vertex and its
  // distance. Distances are reset for the component afterwards.
  auto sweep = [&](Vertex s, std::size_t& visited_edges_twice) {
    queue.clear();
    queue.push_back(s);
    dist[s] = 0;
    Vertex far = s;
    visited_edges_twice = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      Vertex u = queue[h];
      if (dist[u] > dist[far]) far = u;
      for (Vertex v : g.neighbors(u)) {
        if (gone[v]) continue;
        ++visited_edges_twice;
        if (dist[v] == kUnseen) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    return std::pair<Vertex, std::uint32_t>{far, dist[far]};
  };

  std::vector<std::uint8_t> done(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (gone[s] || done[s]) continue;
    std::size_t twice = 0;
    auto [a, da] = sweep(s, twice);
    const std::size_t comp_vertices = queue.size();
    if (twice / 2 != comp_vertices - 1) return std::nullopt;  // a tree has |V|-1 edges
    for (Vertex v : queue) {
      done[v] = 1;
      dist[v] = kUnseen;
    }
    auto [b, diameter] = sweep(a, twice);
    for (Vertex v : queue) dist[v] = kUnseen;
    best = std::max<std::size_t>(best, (diameter + 1) / 2);
    (void)da;
    (void)b;
  }
  return best;
}

std::size_t min_degree(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("min_degree of the empty graph");
  std::size_t d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

std::size_t max_degree(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("max_degree of the empty graph");
  std::size_t d = 0;
  for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

bool is_vertex_cover(const Graph& g, const VertexSet& cover) {
  for (const auto& [u, v] : g.edges())
    if (!cover.contains(u) && !cover.contains(v)) return false;
  return true;
}

bool is_dominating_set(const Graph& g, const VertexSet& dominators) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (dominators.contains(v)) continue;
    auto nb = g.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(), [&](Vertex u) { return dominators.contains(u); }))
      return false;
  }
  return true;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<std::uint8_t> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : g.neighbors(u))
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
  }
  return count == g.order();
}

bool is_simple_symmetric(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    auto nb = g.neighbors(u);
    if (!std::is_sorted(nb.begin(), nb.end())) return false;
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return false;
    for (Vertex v : nb) {
      if (v == u || v >= g.order()) return false;
      auto back = g.neighbors(v);
      if (!std::binary_search(back.begin(), back.end(), u)) return false;
    }
  }
  return true;
}

}  // namespace oa
