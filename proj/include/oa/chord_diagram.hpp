#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "oa/graph.hpp"

namespace oa {

/// Circular sequence of chord endpoints. Chords are identified 0..c-1 and
/// each identifier occurs exactly twice; chord i is vertex i of the circle graph.
class ChordDiagram {
 public:
  ChordDiagram() = default;

  /// Throws GraphInputError unless every identifier in 0..c-1 occurs exactly twice.
  explicit ChordDiagram(std::vector<Vertex> endpoints);

  std::size_t chord_count() const noexcept { return endpoints_.size() / 2; }
  const std::vector<Vertex>& endpoints() const noexcept { return endpoints_; }

  /// Positions of the first and second occurrence of `chord`.
  std::pair<std::size_t, std::size_t> positions(Vertex chord) const { return positions_[chord]; }

  /// True when the occurrences of `a` separate those of `b` around the circle.
  bool crosses(Vertex a, Vertex b) const;

  bool operator==(const ChordDiagram& other) const { return endpoints_ == other.endpoints_; }

 private:
  std::vector<Vertex> endpoints_;
  std::vector<std::pair<std::size_t, std::size_t>> positions_;
};

/// Circle graph of the diagram: chords are adjacent iff they interleave.
Graph chord_diagram_to_graph(const ChordDiagram& cd);

}  // namespace oa
