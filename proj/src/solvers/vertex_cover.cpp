#include <algorithm>

#include "oa/errors.hpp"
#include "oa/solvers.hpp"

namespace oa {

namespace {

class CoverSearch {
 public:
  CoverSearch(const Graph& g, detail::BudgetMeter& meter)
      : g_(g), meter_(meter), in_(g.order(), 0), edges_(g.edges()) {
    best_.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) best_[v] = v;
  }

  VertexSet run() {
    if (!edges_.empty()) search(0);
    else best_.clear();
    return VertexSet(best_);
  }

 private:
  void search(std::size_t next_edge) {
    if (!meter_.tick()) throw BudgetExhaustedError("vertex cover search exceeded its budget");
    while (next_edge < edges_.size() && (in_[edges_[next_edge].first] || in_[edges_[next_edge].second]))
      ++next_edge;
    if (next_edge == edges_.size()) {
      if (current_.size() < best_.size()) best_ = current_;
      return;
    }
    if (current_.size() + 1 >= best_.size()) return;
    for (Vertex pick : {edges_[next_edge].first, edges_[next_edge].second}) {
      in_[pick] = 1;
      current_.push_back(pick);
      search(next_edge + 1);
      current_.pop_back();
      in_[pick] = 0;
    }
  }

  const Graph& g_;
  detail::BudgetMeter& meter_;
  std::vector<std::uint8_t> in_;
  std::vector<Edge> edges_;
  std::vector<Vertex> current_, best_;
};

}  // namespace

VertexSet min_vertex_cover_exact(const Graph& g, const SearchBudget& budget) {
  detail::BudgetMeter meter(budget);
  return CoverSearch(g, meter).run();
}

SolveOutcome solve_via_vertex_cover(const Graph& g, const SearchBudget& budget) {
  if (g.order() == 0) throw PreconditionError("solve_via_vertex_cover needs a non-empty graph");
  VertexSet cover;
  try {
    cover = min_vertex_cover_exact(g, budget);
  } catch (const BudgetExhaustedError&) {
    SolveOutcome out;
    out.status = SolveStatus::budget_exhausted;
    return out;
  }
  AllianceInstance inst;
  inst.graph = g;
  inst.r = std::max<std::size_t>(cover.size(), 1);
  inst.strength = 1;
  return solve_branching(inst, budget);
}

}  // namespace oa
