#pragma once

#include <cstddef>
#include <optional>

#include "oa/graph.hpp"

namespace oa {

struct Bipartition {
  VertexSet left;
  VertexSet right;
};

struct SplitPartition {
  VertexSet clique;
  VertexSet independent;
};

/// Breadth-first 2-coloring; absent when an odd cycle exists.
std::optional<Bipartition> is_bipartite(const Graph& g);

/// True when `p` partitions V(g) and no edge runs inside either side.
bool verify_bipartition(const Graph& g, const Bipartition& p);

/// Degree-sequence split recognition followed by an explicit check of the
/// returned partition.
std::optional<SplitPartition> is_split(const Graph& g);

bool verify_split_partition(const Graph& g, const SplitPartition& p);

/// Deletes `removed` and, if what remains is a forest, returns the largest
/// center-rooted height over its trees (edge count). Absent if a cycle remains.
std::optional<std::size_t> forest_height_after_deletion(const Graph& g, const VertexSet& removed);

/// Throw PreconditionError on the empty graph.
std::size_t min_degree(const Graph& g);
std::size_t max_degree(const Graph& g);

bool is_vertex_cover(const Graph& g, const VertexSet& cover);
bool is_dominating_set(const Graph& g, const VertexSet& dominators);
bool is_connected(const Graph& g);

/// Full scan: sorted loop-free neighbor lists, no repeats, symmetric adjacency.
bool is_simple_symmetric(const Graph& g);

}  // namespace oa
