#include <algorithm>

#include "oa/solvers.hpp"

namespace oa {

namespace {

// Subset enumeration with incremental boundary bookkeeping: `bad_` counts
// vertices currently in N(S) that fail d_S(v) >= d_{S^c}(v) + strength.
class SubsetWalker {
 public:
  SubsetWalker(const Graph& g, int strength)
      : g_(g), strength_(strength), in_(g.order(), 0), inside_(g.order(), 0) {}

  void add(Vertex v) {
    if (violated(v)) --bad_;
    in_[v] = 1;
    members_.push_back(v);
    for (Vertex u : g_.neighbors(v)) {
      bool before = violated(u);
      ++inside_[u];
      bump(before, violated(u));
    }
  }

  void remove(Vertex v) {
    for (Vertex u : g_.neighbors(v)) {
      bool before = violated(u);
      --inside_[u];
      bump(before, violated(u));
    }
    in_[v] = 0;
    members_.pop_back();
    if (violated(v)) ++bad_;
  }

  bool valid() const noexcept { return bad_ == 0 && !members_.empty(); }
  VertexSet members() const { return VertexSet(members_); }

 private:
  bool violated(Vertex v) const {
    if (in_[v] || inside_[v] == 0) return false;
    return 2 * static_cast<long long>(inside_[v]) < static_cast<long long>(g_.degree(v)) + strength_;
  }
  void bump(bool before, bool after) {
    if (before && !after) --bad_;
    if (!before && after) ++bad_;
  }

  const Graph& g_;
  int strength_;
  std::vector<std::uint8_t> in_;
  std::vector<std::uint32_t> inside_;
  std::vector<Vertex> members_;
  long long bad_ = 0;
};

}  // namespace

SolveOutcome solve_bruteforce(const AllianceInstance& inst, const SearchBudget& budget) {
  inst.validate();
  detail::BudgetMeter meter(budget);
  SolveOutcome out;

  const std::size_t base = inst.necessary.size();
  if (inst.r == 0 || base > inst.r) return out;

  std::vector<Vertex> pool;
  for (Vertex v = 0; v < inst.graph.order(); ++v)
    if (!inst.forbidden.contains(v) && !inst.necessary.contains(v)) pool.push_back(v);

  SubsetWalker walker(inst.graph, inst.strength);
  for (Vertex v : inst.necessary) walker.add(v);

  const std::size_t lo = inst.exact ? inst.r : std::max<std::size_t>(1, base);
  bool stop = false;

  // Chooses `left` more pool entries starting at `from`, lexicographically.
  auto choose = [&](auto&& self, std::size_t from, std::size_t left) -> void {
    if (left == 0) {
      if (!meter.tick()) {
        stop = true;
        return;
      }
      if (walker.valid()) {
        out.status = SolveStatus::found;
        out.solution = walker.members();
        stop = true;
      }
      return;
    }
    for (std::size_t i = from; i + left <= pool.size() && !stop; ++i) {
      walker.add(pool[i]);
      self(self, i + 1, left - 1);
      walker.remove(pool[i]);
    }
  };

  for (std::size_t size = lo; size <= inst.r && !stop; ++size) {
    if (size - base > pool.size()) break;
    choose(choose, 0, size - base);
  }
  out.work = meter.used();
  if (meter.exhausted() && out.status != SolveStatus::found) out.status = SolveStatus::budget_exhausted;
  return out;
}

}  // namespace oa
