#pragma once

#include <cstddef>
#include <cstdint>

#include "oa/alliance.hpp"
#include "oa/sources.hpp"

namespace oa {

/// G(n, p). Deterministic per seed.
Graph gen_random_graph(std::size_t n, double p, std::uint64_t seed);

/// Connected G(n, p) resampled until the maximum degree is at most 3; k is
/// the minimum vertex cover size, so every instance is a tight yes-instance.
VcInstance gen_random_vc3(std::size_t n, std::uint64_t seed);

/// Entries in 0..max_entry; vectors with no positive entry and dimensions with
/// column sum 0 are resampled. Targets lie in 1..column sum, k' in 1..n.
MrssInstance gen_random_mrss(std::size_t k, std::size_t n, std::uint32_t max_entry, std::uint64_t seed);

/// Thin sets of one to k cells. With `planted`, every set contains a cell of
/// one hidden permutation, which makes the instance a yes-instance.
PhsInstance gen_random_phs(std::size_t k, std::size_t sets, std::uint64_t seed, bool planted = true);

/// k strings of length n. With `planted`, each string differs from a hidden
/// center in at most d positions.
ClosestStringInstance gen_random_strings(std::size_t k, std::size_t n, std::size_t d, std::uint64_t seed,
                                         bool planted = true);

/// Chord i has endpoints 2i and 2i+3 (mod 2n); the chord graph is C_n for n >= 3.
/// k is the domination number ceil(n/3).
CircleDsInstance gen_cycle_diagram(std::size_t n);

/// Random chord diagram on n chords, resampled until every chord crosses at
/// least two others; k is the domination number.
CircleDsInstance gen_random_circle(std::size_t n, std::uint64_t seed);

/// w x h grid; k is the domination number (exhaustive, so w*h is capped).
DsInstance gen_grid(std::size_t w, std::size_t h);

/// Connected spanning subgraph of the w x h grid: a random spanning tree plus
/// each remaining grid edge with probability p. k is the domination number.
DsInstance gen_random_grid_subgraph(std::size_t w, std::size_t h, double p, std::uint64_t seed);

/// Offensive alliance instance with forbidden vertices in valid structure:
/// a connected random core on n vertices plus `pairs` forbidden hubs, each with
/// a forbidden pendant and edges into the core. r is the minimum feasible size,
/// resampled until one exists with r <= max_r.
AllianceInstance gen_random_oaf(std::size_t n, std::size_t pairs, std::size_t max_r, std::uint64_t seed);

}  // namespace oa
