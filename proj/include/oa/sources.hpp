#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oa/chord_diagram.hpp"
#include "oa/graph.hpp"

namespace oa {

/// Exhaustive oracles refuse inputs above these sizes with DeskScaleError.
namespace caps {
inline constexpr std::size_t kMrssVectors = 16;
inline constexpr std::size_t kMrssDimensions = 4;
inline constexpr std::uint32_t kMrssEntry = 9;
inline constexpr std::size_t kPhsSide = 8;
inline constexpr std::size_t kStringLength = 20;
inline constexpr std::size_t kGraphOrder = 20;
}  // namespace caps

using IntVector = std::vector<std::uint32_t>;

/// Pick at most `kprime` of `vectors` whose component-wise sum dominates `target`.
struct MrssInstance {
  std::size_t k = 0;
  std::size_t kprime = 0;
  std::vector<IntVector> vectors;
  IntVector target;

  /// Dimensions must all equal k. Throws PreconditionError.
  void validate() const;
};

struct Cell {
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  auto operator<=>(const Cell&) const = default;
};

/// k x k permutation hitting set over a family of thin cell sets (at most one
/// cell per row). Rows and columns are 0-based.
struct PhsInstance {
  std::size_t k = 0;
  std::vector<std::vector<Cell>> family;

  /// Throws PreconditionError on out-of-range cells or a set with two cells in one row.
  void validate() const;
};

/// Column chosen for each row; a permutation of 0..k-1.
using Permutation = std::vector<std::uint32_t>;

/// Equal-length strings over a two-letter alphabet; alphabet[0] plays A1.
struct ClosestStringInstance {
  std::vector<std::string> strings;
  std::size_t d = 0;
  std::array<char, 2> alphabet{'0', '1'};

  std::size_t length() const { return strings.empty() ? 0 : strings.front().size(); }
  /// 0 for alphabet[0], 1 for alphabet[1]; throws PreconditionError otherwise.
  std::size_t letter_index(char c) const;
  void validate() const;
};

struct VcInstance {
  Graph graph;
  std::size_t k = 0;
  bool max_degree_3 = false;

  void validate() const;
};

struct DsInstance {
  Graph graph;
  std::size_t k = 0;
};

struct CircleDsInstance {
  ChordDiagram diagram;
  std::size_t k = 0;

  /// Throws PreconditionError if some chord crosses fewer than two others.
  void validate() const;
};

/// Smallest, then lexicographically least, index subset of size <= k'.
std::optional<std::vector<std::size_t>> oracle_mrss(const MrssInstance& inst);

/// Lexicographically least hitting permutation.
std::optional<Permutation> oracle_phs(const PhsInstance& inst);

/// Lexicographically least central string (alphabet[0] < alphabet[1]).
std::optional<std::string> oracle_closest_string(const ClosestStringInstance& inst);

/// Minimum (then lexicographically least) witness when its size is <= k.
std::optional<VertexSet> oracle_vertex_cover(const VcInstance& inst);
std::optional<VertexSet> oracle_dominating_set(const DsInstance& inst);

/// Throws PreconditionError on a length mismatch.
std::size_t hamming(std::string_view x, std::string_view y);

bool is_mrss_witness(const MrssInstance& inst, const std::vector<std::size_t>& chosen);
bool is_permutation(const Permutation& p, std::size_t k);
bool is_permutation_hitting_set(const PhsInstance& inst, const Permutation& p);
bool is_central_string(const ClosestStringInstance& inst, std::string_view y);

/// Cells (i, p[i]).
std::vector<Cell> permutation_cells(const Permutation& p);

}  // namespace oa
