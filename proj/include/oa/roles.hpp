#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "oa/graph.hpp"

namespace oa {

/// Contiguous identifiers {first, ..., first + count - 1}.
struct VertexRange {
  Vertex first = 0;
  std::size_t count = 0;

  Vertex operator[](std::size_t i) const { return first + static_cast<Vertex>(i); }
  bool contains(Vertex v) const noexcept { return v >= first && v - first < count; }
  VertexSet set() const { return VertexSet::range(first, count); }
  Vertex back() const { return first + static_cast<Vertex>(count - 1); }
};

/// Role of every vertex, stored as named blocks of consecutive identifiers.
/// A vertex in a block of size one has the block name as its role; otherwise
/// its role is "name[i]" with 1-based i.
class RoleMap {
 public:
  struct Block {
    std::string name;
    Vertex first;
    std::size_t count;
  };

  RoleMap() = default;

  /// Appends a block of `count` new vertices; returns its range. Names must be unique.
  VertexRange append(std::string name, std::size_t count);

  std::size_t order() const noexcept { return order_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }

  bool has(std::string_view name) const;
  /// Throws std::out_of_range for an unknown block.
  VertexRange operator[](std::string_view name) const;
  /// Single vertex of a block of size one.
  Vertex vertex(std::string_view name) const;

  /// Throws std::out_of_range for v >= order().
  std::string role(Vertex v) const;
  const Block& block_of(Vertex v) const;

  bool operator==(const RoleMap& other) const;

 private:
  std::vector<Block> blocks_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t order_ = 0;
};

}  // namespace oa
