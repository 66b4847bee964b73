#include <algorithm>

#include "oa/solvers.hpp"

namespace oa {

namespace {

enum : std::uint8_t { kFree = 0, kIn = 1, kOut = 2 };

long long ceil_half(long long x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }

// Branch-and-bound over In/Out/Free tripartitions.
//
// A vertex v outside In with a neighbor in In is on the boundary and needs
// needed(v) = ceil((d(v) + strength) / 2) - d_In(v) more neighbors in In.
// Propagation: an Out vertex whose need exceeds its free neighbors or the
// remaining capacity prunes the branch; when the need equals its free
// neighbors they are all forced In. A Free boundary vertex that could not
// be satisfied if it stayed out is forced In.
// Branching: first an Out boundary vertex with positive need (try each free
// neighbor as the next In vertex), otherwise a Free boundary vertex (In, then
// Out). Lowest identifier first throughout.
class BranchSearch {
 public:
  BranchSearch(const AllianceInstance& inst, detail::BudgetMeter& meter)
      : inst_(inst),
        g_(inst.graph),
        meter_(meter),
        state_(g_.order(), kFree),
        d_in_(g_.order(), 0),
        d_free_(g_.order(), 0) {
    for (Vertex v = 0; v < g_.order(); ++v) d_free_[v] = static_cast<int>(g_.degree(v));
    limit_ = inst.r;
  }

  SolveOutcome run() {
    SolveOutcome out;
    const std::size_t n = g_.order();
    if (inst_.r == 0 || inst_.necessary.size() > inst_.r) return finish(out);

    for (Vertex v : inst_.forbidden) assign(v, kOut);
    if (!inst_.necessary.empty()) {
      for (Vertex v : inst_.necessary) assign(v, kIn);
      search();
    } else {
      // Seed loop: solutions containing earlier seeds were already explored.
      for (Vertex seed = 0; seed < n && !stop_; ++seed) {
        if (inst_.forbidden.contains(seed)) continue;
        std::size_t mark = trail_.size();
        assign(seed, kIn);
        search();
        undo(mark);
        if (!inst_.exact && found_ && best_.size() == 1) break;
        assign(seed, kOut);
      }
    }
    if (found_) {
      out.status = SolveStatus::found;
      out.solution = best_;
    }
    return finish(out);
  }

 private:
  SolveOutcome finish(SolveOutcome out) {
    out.work = meter_.used();
    if (aborted_ && !(found_ && inst_.exact)) {
      out.status = SolveStatus::budget_exhausted;
      out.solution = VertexSet{};
    }
    return out;
  }

  long long needed(Vertex v) const {
    return ceil_half(static_cast<long long>(g_.degree(v)) + inst_.strength) - d_in_[v];
  }

  long long capacity() const { return static_cast<long long>(limit_) - static_cast<long long>(in_count_); }

  void assign(Vertex v, std::uint8_t s) {
    trail_.push_back(v);
    state_[v] = s;
    if (s == kIn) ++in_count_;
    for (Vertex u : g_.neighbors(v)) {
      --d_free_[u];
      if (s == kIn) ++d_in_[u];
    }
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      Vertex v = trail_.back();
      trail_.pop_back();
      if (state_[v] == kIn) --in_count_;
      for (Vertex u : g_.neighbors(v)) {
        ++d_free_[u];
        if (state_[v] == kIn) --d_in_[u];
      }
      state_[v] = kFree;
    }
  }

  bool propagate() {
    for (bool changed = true; changed;) {
      changed = false;
      if (in_count_ > limit_) return false;
      for (Vertex v = 0; v < g_.order(); ++v) {
        if (state_[v] == kIn || d_in_[v] == 0) continue;
        const long long need = needed(v);
        if (need <= 0) continue;
        if (state_[v] == kOut) {
          if (need > d_free_[v] || need > capacity()) return false;
          if (need == d_free_[v]) {
            for (Vertex u : g_.neighbors(v))
              if (state_[u] == kFree) assign(u, kIn);
            changed = true;
            if (in_count_ > limit_) return false;
          }
        } else if (need > std::min<long long>(d_free_[v], capacity())) {
          assign(v, kIn);
          changed = true;
          if (in_count_ > limit_) return false;
        }
      }
    }
    return true;
  }

  void record() {
    best_ = in_members();
    found_ = true;
    if (inst_.exact) {
      stop_ = true;
    } else {
      limit_ = in_count_ - 1;
    }
  }

  VertexSet in_members() const {
    std::vector<Vertex> members;
    members.reserve(in_count_);
    for (Vertex v = 0; v < g_.order(); ++v)
      if (state_[v] == kIn) members.push_back(v);
    return VertexSet(std::move(members));
  }

  void search() {
    if (stop_) return;
    if (!meter_.tick()) {
      aborted_ = true;
      stop_ = true;
      return;
    }
    const std::size_t mark = trail_.size();
    if (!propagate()) {
      undo(mark);
      return;
    }

    const std::size_t n = g_.order();
    Vertex demand = static_cast<Vertex>(n), frontier = static_cast<Vertex>(n), loose = static_cast<Vertex>(n);
    for (Vertex v = 0; v < n; ++v) {
      if (state_[v] == kOut && d_in_[v] > 0 && needed(v) > 0) {
        demand = v;
        break;
      }
      if (state_[v] == kFree) {
        if (d_in_[v] > 0 && frontier == n) frontier = v;
        if (loose == n) loose = v;
      }
    }

    if (demand < n) {
      std::vector<Vertex> options;
      for (Vertex u : g_.neighbors(demand))
        if (state_[u] == kFree) options.push_back(u);
      for (Vertex u : options) {
        if (stop_) break;
        std::size_t inner = trail_.size();
        assign(u, kIn);
        search();
        undo(inner);
        assign(u, kOut);  // later options exclude this one
      }
    } else if (frontier < n) {
      branch_on(frontier);
    } else if (in_count_ >= 1 && in_count_ <= limit_ && (!inst_.exact || in_count_ == inst_.r)) {
      record();
    } else if (inst_.exact && in_count_ < inst_.r && loose < n) {
      branch_on(loose);
    }
    undo(mark);
  }

  void branch_on(Vertex v) {
    std::size_t mark = trail_.size();
    assign(v, kIn);
    search();
    undo(mark);
    if (stop_) return;
    assign(v, kOut);
    search();
    undo(mark);
  }

  const AllianceInstance& inst_;
  const Graph& g_;
  detail::BudgetMeter& meter_;
  std::vector<std::uint8_t> state_;
  std::vector<int> d_in_, d_free_;
  std::vector<Vertex> trail_;
  std::size_t in_count_ = 0;
  std::size_t limit_ = 0;
  VertexSet best_;
  bool found_ = false;
  bool stop_ = false;
  bool aborted_ = false;
};

}  // namespace

SolveOutcome solve_branching(const AllianceInstance& inst, const SearchBudget& budget) {
  inst.validate();
  detail::BudgetMeter meter(budget);
  BranchSearch search(inst, meter);
  return search.run();
}

}  // namespace oa
