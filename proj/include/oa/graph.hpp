#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "oa/errors.hpp"

namespace oa {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free set of vertex identifiers.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> items);
  explicit VertexSet(std::vector<Vertex> items);

  /// The contiguous block {first, ..., first + count - 1}.
  static VertexSet range(Vertex first, std::size_t count);

  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const_iterator begin() const noexcept { return items_.begin(); }
  const_iterator end() const noexcept { return items_.end(); }
  Vertex front() const { return items_.front(); }
  Vertex back() const { return items_.back(); }
  const std::vector<Vertex>& items() const noexcept { return items_; }

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<Vertex> items_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

/// Simple undirected graph on vertices 0..n-1, immutable once built.
/// Neighbors are kept in one flat sorted array per vertex (CSR layout).
class Graph {
 public:
  Graph() = default;

  /// Adopts prebuilt CSR arrays. Neighbor lists must already be sorted,
  /// loop-free and symmetric; only the array shapes are checked here.
  static Graph from_csr(std::vector<std::uint32_t> offsets, std::vector<Vertex> adjacency);

  std::size_t order() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t size() const noexcept { return adjacency_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const noexcept { return v < order(); }

  /// Every edge once as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  friend class GraphBuilder;
  std::vector<std::uint32_t> offsets_;
  std::vector<Vertex> adjacency_;
};

/// Accumulates vertices and edges, then freezes them into a Graph.
/// Parallel edges are collapsed at build time and counted.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t order = 0) : order_(order) {}

  std::size_t order() const noexcept { return order_; }

  /// Appends `count` vertices and returns the identifier of the first.
  Vertex add_vertices(std::size_t count);
  Vertex add_vertex() { return add_vertices(1); }

  /// Throws GraphInputError on a self-loop or an out-of-range endpoint.
  void add_edge(Vertex u, Vertex v);

  /// Makes every vertex of `block` pairwise adjacent.
  void add_clique(const VertexSet& block);

  /// Copies all edges of `g`; requires g.order() <= order().
  void add_graph(const Graph& g);

  void reserve_edges(std::size_t count) { edges_.reserve(count); }

  Graph build();
  std::size_t duplicates_collapsed() const noexcept { return duplicates_; }

 private:
  std::size_t order_;
  std::vector<Edge> edges_;
  std::size_t duplicates_ = 0;
};

struct EdgeListGraph {
  Graph graph;
  std::size_t duplicate_edges = 0;
  bool duplicates_collapsed() const noexcept { return duplicate_edges > 0; }
};

/// Builds a graph from an explicit edge list. Errors report the edge index.
EdgeListGraph graph_from_edge_list(std::size_t n, std::span<const Edge> edges);

/// Edge-list text format: "n m" header then m lines "u v" (0-based).
/// Errors report the 1-based line number.
EdgeListGraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace oa
