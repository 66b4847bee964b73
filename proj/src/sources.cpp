#include "oa/sources.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "oa/errors.hpp"
#include "oa/structure.hpp"

namespace oa {

namespace {

// Calls `visit` on every index subset of {0..n-1} with `size` elements in
// lexicographic order until it returns true; returns that subset.
std::optional<std::vector<std::size_t>> first_combination(
    std::size_t n, std::size_t size, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (size > n) return std::nullopt;
  std::vector<std::size_t> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (visit(idx)) return idx;
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
    if (i == 0) return std::nullopt;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::optional<VertexSet> smallest_vertex_subset(const Graph& g, std::size_t bound,
                                                const std::function<bool(const VertexSet&)>& accept) {
  if (g.order() > caps::kGraphOrder)
    throw DeskScaleError("exhaustive graph oracle limited to " + std::to_string(caps::kGraphOrder) + " vertices");
  for (std::size_t size = 0; size <= std::min(bound, g.order()); ++size) {
    VertexSet found;
    auto hit = first_combination(g.order(), size, [&](const std::vector<std::size_t>& idx) {
      std::vector<Vertex> members(idx.begin(), idx.end());
      VertexSet s(std::move(members));
      if (!accept(s)) return false;
      found = std::move(s);
      return true;
    });
    if (hit) return found;
  }
  return std::nullopt;
}

}  // namespace

void MrssInstance::validate() const {
  if (target.size() != k) throw PreconditionError("target has dimension " + std::to_string(target.size()) + ", expected " + std::to_string(k));
  for (std::size_t i = 0; i < vectors.size(); ++i)
    if (vectors[i].size() != k)
      throw PreconditionError("vector " + std::to_string(i) + " has dimension " + std::to_string(vectors[i].size()) +
                              ", expected " + std::to_string(k));
}

void PhsInstance::validate() const {
  for (std::size_t f = 0; f < family.size(); ++f) {
    std::vector<std::uint8_t> row_used(k, 0);
    for (const Cell& c : family[f]) {
      if (c.row >= k || c.col >= k)
        throw PreconditionError("set " + std::to_string(f) + " has a cell outside the " + std::to_string(k) + "x" +
                                std::to_string(k) + " grid");
      if (row_used[c.row]++)
        throw PreconditionError("set " + std::to_string(f) + " is not thin: two cells in row " + std::to_string(c.row));
    }
  }
}

std::size_t ClosestStringInstance::letter_index(char c) const {
  if (c == alphabet[0]) return 0;
  if (c == alphabet[1]) return 1;
  throw PreconditionError(std::string("character '") + c + "' is outside the binary alphabet");
}

void ClosestStringInstance::validate() const {
  if (alphabet[0] == alphabet[1]) throw PreconditionError("alphabet letters must differ");
  for (const auto& s : strings) {
    if (s.size() != length()) throw PreconditionError("strings must have equal length");
    for (char c : s) letter_index(c);
  }
}

void VcInstance::validate() const {
  if (max_degree_3 && graph.order() > 0 && max_degree(graph) > 3)
    throw PreconditionError("graph has a vertex of degree " + std::to_string(max_degree(graph)) + " > 3");
}

void CircleDsInstance::validate() const {
  Graph g = chord_diagram_to_graph(diagram);
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) < 2)
      throw PreconditionError("chord " + std::to_string(v) + " crosses only " + std::to_string(g.degree(v)) +
                              " other chords; at least two required");
}

std::size_t hamming(std::string_view x, std::string_view y) {
  if (x.size() != y.size()) throw PreconditionError("hamming distance needs equal lengths");
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
  return d;
}

bool is_mrss_witness(const MrssInstance& inst, const std::vector<std::size_t>& chosen) {
  if (chosen.size() > inst.kprime) return false;
  std::vector<std::size_t> sorted = chosen;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t dim = 0; dim < inst.k; ++dim) {
    std::uint64_t sum = 0;
    for (std::size_t i : chosen) {
      if (i >= inst.vectors.size()) return false;
      sum += inst.vectors[i][dim];
    }
    if (sum < inst.target[dim]) return false;
  }
  return true;
}

std::optional<std::vector<std::size_t>> oracle_mrss(const MrssInstance& inst) {
  inst.validate();
  if (inst.vectors.size() > caps::kMrssVectors || inst.k > caps::kMrssDimensions)
    throw DeskScaleError("MRSS oracle limited to " + std::to_string(caps::kMrssVectors) + " vectors of dimension <= " +
                         std::to_string(caps::kMrssDimensions));
  for (const auto& v : inst.vectors)
    for (auto x : v)
      if (x > caps::kMrssEntry) throw DeskScaleError("MRSS oracle limited to entries <= " + std::to_string(caps::kMrssEntry));
  const std::size_t top = std::min(inst.kprime, inst.vectors.size());
  for (std::size_t size = 0; size <= top; ++size) {
    auto hit = first_combination(inst.vectors.size(), size,
                                 [&](const std::vector<std::size_t>& idx) { return is_mrss_witness(inst, idx); });
    if (hit) return hit;
  }
  return std::nullopt;
}

bool is_permutation(const Permutation& p, std::size_t k) {
  if (p.size() != k) return false;
  std::vector<std::uint8_t> seen(k, 0);
  for (auto c : p) {
    if (c >= k || seen[c]) return false;
    seen[c] = 1;
  }
  return true;
}

bool is_permutation_hitting_set(const PhsInstance& inst, const Permutation& p) {
  if (!is_permutation(p, inst.k)) return false;
  return std::all_of(inst.family.begin(), inst.family.end(), [&](const std::vector<Cell>& set) {
    return std::any_of(set.begin(), set.end(), [&](const Cell& c) { return p[c.row] == c.col; });
  });
}

std::vector<Cell> permutation_cells(const Permutation& p) {
  std::vector<Cell> cells;
  for (std::uint32_t i = 0; i < p.size(); ++i) cells.push_back({i, p[i]});
  return cells;
}

std::optional<Permutation> oracle_phs(const PhsInstance& inst) {
  inst.validate();
  if (inst.k > caps::kPhsSide)
    throw DeskScaleError("permutation hitting set oracle limited to k <= " + std::to_string(caps::kPhsSide));
  Permutation p(inst.k);
  std::iota(p.begin(), p.end(), 0u);
  do {
    if (is_permutation_hitting_set(inst, p)) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

bool is_central_string(const ClosestStringInstance& inst, std::string_view y) {
  if (y.size() != inst.length()) return false;
  for (char c : y)
    if (c != inst.alphabet[0] && c != inst.alphabet[1]) return false;
  return std::all_of(inst.strings.begin(), inst.strings.end(),
                     [&](const std::string& x) { return hamming(x, y) <= inst.d; });
}

std::optional<std::string> oracle_closest_string(const ClosestStringInstance& inst) {
  inst.validate();
  const std::size_t n = inst.length();
  if (n > caps::kStringLength)
    throw DeskScaleError("closest string oracle limited to length " + std::to_string(caps::kStringLength));
  std::string y(n, inst.alphabet[0]);
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    // Most significant position first so that counting order is lexicographic.
    for (std::size_t i = 0; i < n; ++i) y[i] = inst.alphabet[(bits >> (n - 1 - i)) & 1u];
    if (is_central_string(inst, y)) return y;
  }
  return std::nullopt;
}

std::optional<VertexSet> oracle_vertex_cover(const VcInstance& inst) {
  inst.validate();
  return smallest_vertex_subset(inst.graph, inst.k, [&](const VertexSet& s) { return is_vertex_cover(inst.graph, s); });
}

std::optional<VertexSet> oracle_dominating_set(const DsInstance& inst) {
  return smallest_vertex_subset(inst.graph, inst.k,
                                [&](const VertexSet& s) { return is_dominating_set(inst.graph, s); });
}

}  // namespace oa
