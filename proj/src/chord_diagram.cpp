#include "oa/chord_diagram.hpp"

#include <algorithm>
#include <string>

namespace oa {

ChordDiagram::ChordDiagram(std::vector<Vertex> endpoints) : endpoints_(std::move(endpoints)) {
  if (endpoints_.size() % 2 != 0)
    throw GraphInputError("chord diagram has an odd number of endpoints");
  const std::size_t c = endpoints_.size() / 2;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  positions_.assign(c, {kNone, kNone});
  for (std::size_t i = 0; i < endpoints_.size(); ++i) {
    Vertex id = endpoints_[i];
    if (id >= c)
      throw GraphInputError("chord identifier " + std::to_string(id) + " outside 0.." +
                                std::to_string(c == 0 ? 0 : c - 1),
                            i);
    auto& [first, second] = positions_[id];
    if (first == kNone) {
      first = i;
    } else if (second == kNone) {
      second = i;
    } else {
      throw GraphInputError("chord " + std::to_string(id) + " occurs more than twice", i);
    }
  }
  for (std::size_t id = 0; id < c; ++id)
    if (positions_[id].second == kNone)
      throw GraphInputError("chord " + std::to_string(id) + " does not occur exactly twice");
}

bool ChordDiagram::crosses(Vertex a, Vertex b) const {
  if (a == b) return false;
  auto [a1, a2] = positions_[a];
  auto [b1, b2] = positions_[b];
  bool first_inside = a1 < b1 && b1 < a2;
  bool second_inside = a1 < b2 && b2 < a2;
  return first_inside != second_inside;
}

Graph chord_diagram_to_graph(const ChordDiagram& cd) {
  // Sweep: a chord opened at p1 and closed at p2 crosses exactly the chords
  // opened inside (p1, p2) whose closing point lies beyond p2.
  const auto& seq = cd.endpoints();
  const std::size_t c = cd.chord_count();
  GraphBuilder b(c);
  std::vector<Vertex> open;  // chords currently open, in opening order
  std::vector<std::size_t> slot(c, 0);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    Vertex id = seq[i];
    auto [p1, p2] = cd.positions(id);
    if (i == p1) {
      slot[id] = open.size();
      open.push_back(id);
      continue;
    }
    // Closing `id`: every chord opened after it and still open crosses it.
    std::size_t k = slot[id];
    for (std::size_t j = k + 1; j < open.size(); ++j) b.add_edge(id, open[j]);
    open.erase(open.begin() + static_cast<std::ptrdiff_t>(k));
    for (std::size_t j = k; j < open.size(); ++j) slot[open[j]] = j;
    (void)p2;
  }
  return b.build();
}

}  // namespace oa
