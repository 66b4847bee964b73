#include "oa/graph.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

namespace oa {

VertexSet::VertexSet(std::initializer_list<Vertex> items) : VertexSet(std::vector<Vertex>(items)) {}

VertexSet::VertexSet(std::vector<Vertex> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

VertexSet VertexSet::range(Vertex first, std::size_t count) {
  VertexSet s;
  s.items_.resize(count);
  for (std::size_t i = 0; i < count; ++i) s.items_[i] = first + static_cast<Vertex>(i);
  return s;
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(items_.begin(), items_.end(), v); }

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(items_.begin(), items_.end(), v);
  if (it == items_.end() || *it != v) items_.insert(it, v);
}

void VertexSet::erase(Vertex v) {
  auto it = std::lower_bound(items_.begin(), items_.end(), v);
  if (it != items_.end() && *it == v) items_.erase(it);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  auto nb = neighbors(degree(u) <= degree(v) ? u : v);
  Vertex other = degree(u) <= degree(v) ? v : u;
  return std::binary_search(nb.begin(), nb.end(), other);
}

Graph Graph::from_csr(std::vector<std::uint32_t> offsets, std::vector<Vertex> adjacency) {
  if (offsets.empty() || offsets.front() != 0 || offsets.back() != adjacency.size() ||
      !std::is_sorted(offsets.begin(), offsets.end()) || adjacency.size() % 2 != 0)
    throw PreconditionError("malformed CSR arrays");
  Graph g;
  g.offsets_ = std::move(offsets);
  g.adjacency_ = std::move(adjacency);
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Vertex GraphBuilder::add_vertices(std::size_t count) {
  if (order_ + count > std::numeric_limits<Vertex>::max())
    throw DeskScaleError("graph order exceeds the 32-bit vertex identifier range");
  auto first = static_cast<Vertex>(order_);
  order_ += count;
  return first;
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= order_ || v >= order_)
    throw GraphInputError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                          std::to_string(v) + ") with n = " + std::to_string(order_));
  if (u == v) throw GraphInputError("self-loop at vertex " + std::to_string(u));
  edges_.emplace_back(u, v);
}

void GraphBuilder::add_clique(const VertexSet& block) {
  const auto& items = block.items();
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = i + 1; j < items.size(); ++j) add_edge(items[i], items[j]);
}

void GraphBuilder::add_graph(const Graph& g) {
  if (g.order() > order_) throw GraphInputError("source graph larger than builder");
  edges_.reserve(edges_.size() + g.size());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v) edges_.emplace_back(u, v);
}

Graph GraphBuilder::build() {
  if (2 * edges_.size() >= std::numeric_limits<std::uint32_t>::max())
    throw DeskScaleError("edge count exceeds the adjacency index range");

  Graph g;
  g.offsets_.assign(order_ + 1, 0);
  for (const auto& [u, v] : edges_) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t i = 0; i < order_; ++i) g.offsets_[i + 1] += g.offsets_[i];

  g.adjacency_.resize(2 * edges_.size());
  {
    std::vector<std::uint32_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges_) {
      g.adjacency_[cursor[u]++] = v;
      g.adjacency_[cursor[v]++] = u;
    }
  }
  std::vector<Edge>().swap(edges_);

  // Sort each neighbor list and squeeze out parallel edges in place.
  std::uint32_t write = 0;
  std::size_t removed = 0;
  for (std::size_t v = 0; v < order_; ++v) {
    auto begin = g.adjacency_.begin() + g.offsets_[v];
    auto end = g.adjacency_.begin() + g.offsets_[v + 1];
    std::sort(begin, end);
    auto last = std::unique(begin, end);
    removed += static_cast<std::size_t>(end - last);
    g.offsets_[v] = write;
    write = static_cast<std::uint32_t>(std::copy(begin, last, g.adjacency_.begin() + write) -
                                       g.adjacency_.begin());
  }
  g.offsets_[order_] = write;
  g.adjacency_.resize(write);
  g.adjacency_.shrink_to_fit();
  duplicates_ += removed / 2;
  return g;
}

EdgeListGraph graph_from_edge_list(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    try {
      b.add_edge(edges[i].first, edges[i].second);
    } catch (const GraphInputError& e) {
      throw GraphInputError(std::string(e.what()) + " (edge #" + std::to_string(i) + ")", i);
    }
  }
  EdgeListGraph out;
  out.graph = b.build();
  out.duplicate_edges = b.duplicates_collapsed();
  return out;
}

EdgeListGraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_line()) throw GraphInputError("empty edge-list input", 1);
  std::size_t n = 0, m = 0;
  {
    std::istringstream header(line);
    if (!(header >> n >> m)) throw GraphInputError("malformed header, expected \"n m\"", line_no);
  }
  GraphBuilder b(n);
  b.reserve_edges(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!next_line())
      throw GraphInputError("expected " + std::to_string(m) + " edges, found " + std::to_string(i),
                            line_no + 1);
    std::istringstream row(line);
    long long u = -1, v = -1;
    if (!(row >> u >> v) || u < 0 || v < 0)
      throw GraphInputError("malformed edge line: \"" + line + "\"", line_no);
    try {
      b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } catch (const GraphInputError& e) {
      throw GraphInputError(std::string(e.what()) + " (line " + std::to_string(line_no) + ")",
                            line_no);
    }
  }
  EdgeListGraph out;
  out.graph = b.build();
  out.duplicate_edges = b.duplicates_collapsed();
  return out;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace oa
