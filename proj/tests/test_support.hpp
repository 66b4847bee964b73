#pragma once

// Small fixtures and independent bitmask oracles shared by the test binaries.
// Nothing here calls into the verifiers under test.

#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "oa/graph.hpp"

namespace oa::testing {

inline Graph make_graph(std::size_t n, std::initializer_list<Edge> edges) {
  std::vector<Edge> list(edges);
  return graph_from_edge_list(n, list).graph;
}

inline Graph path(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

inline Graph cycle(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return b.build();
}

inline Graph complete(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

// Center 0 with `leaves` pendant vertices.
inline Graph star(std::size_t leaves) {
  GraphBuilder b(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) b.add_edge(0, v);
  return b.build();
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return b.build();
}

// Adjacency as bitmasks, for graphs with at most 32 vertices.
inline std::vector<std::uint32_t> masks(const Graph& g) {
  std::vector<std::uint32_t> m(g.order(), 0);
  for (auto [u, v] : g.edges()) {
    m[u] |= 1u << v;
    m[v] |= 1u << u;
  }
  return m;
}

inline VertexSet from_mask(std::uint32_t s) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < 32; ++v)
    if (s >> v & 1u) out.push_back(v);
  return VertexSet(std::move(out));
}

inline std::uint32_t to_mask(const VertexSet& s) {
  std::uint32_t m = 0;
  for (Vertex v : s) m |= 1u << v;
  return m;
}

// Direct definition: every outside vertex touching S has |N(v)∩S| >= |N(v)\S| + strength.
inline bool is_offensive_mask(const std::vector<std::uint32_t>& adj, std::uint32_t s, int strength) {
  if (s == 0) return false;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (s >> v & 1u) continue;
    int inside = std::popcount(adj[v] & s);
    if (inside == 0) continue;
    int outside = std::popcount(adj[v] & ~s);
    if (inside < outside + strength) return false;
  }
  return true;
}

inline bool is_cover_mask(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
  for (std::size_t v = 0; v < adj.size(); ++v)
    if (!(s >> v & 1u) && (adj[v] & ~s)) return false;
  return true;
}

// Minimum alliance size by full subset scan, respecting forbidden/necessary masks.
inline std::optional<int> min_alliance_size(const Graph& g, int strength, std::uint32_t forbidden = 0,
                                            std::uint32_t necessary = 0) {
  auto adj = masks(g);
  std::optional<int> best;
  const std::uint32_t all = g.order() == 32 ? ~0u : (1u << g.order()) - 1;
  for (std::uint32_t s = 1; s <= all && s != 0; ++s) {
    if ((s & forbidden) || (s & necessary) != necessary) continue;
    int size = std::popcount(s);
    if (best && size >= *best) continue;
    if (is_offensive_mask(adj, s, strength)) best = size;
  }
  return best;
}

inline int min_cover_size(const Graph& g) {
  auto adj = masks(g);
  int best = static_cast<int>(g.order());
  for (std::uint32_t s = 0; s < (1u << g.order()); ++s)
    if (std::popcount(s) < best && is_cover_mask(adj, s)) best = std::popcount(s);
  return best;
}

}  // namespace oa::testing
