#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string_view>

#include "oa/alliance.hpp"
#include "oa/graph.hpp"

namespace oa {

/// Work limit for exponential searches: candidate subsets (brute force) or
/// branch nodes (branching searches), plus a wall-clock ceiling.
struct SearchBudget {
  std::uint64_t max_candidates = 100'000'000;
  double max_seconds = 60.0;

  /// Throws PreconditionError unless both limits are positive.
  void validate() const;
};

enum class SolveStatus { found, none_within_bound, budget_exhausted };

std::string_view to_string(SolveStatus status);

struct SolveOutcome {
  SolveStatus status = SolveStatus::none_within_bound;
  VertexSet solution;             // set when status == found
  std::uint64_t work = 0;         // candidates or branch nodes spent

  bool found() const noexcept { return status == SolveStatus::found; }
};

/// Enumerates subsets of V \ forbidden that contain the necessary set, in
/// nondecreasing size and lexicographic order, and returns the first valid
/// one: the lexicographically least minimum solution. With `exact` only
/// subsets of size r are enumerated.
SolveOutcome solve_bruteforce(const AllianceInstance& inst, const SearchBudget& budget);

/// Seeded propagation-and-branching search over In/Out/Free tripartitions.
/// Returns a minimum solution (same size as solve_bruteforce; ties may differ).
SolveOutcome solve_branching(const AllianceInstance& inst, const SearchBudget& budget);

/// Exact minimum vertex cover by branching on an uncovered edge.
/// Throws BudgetExhaustedError when the budget runs out.
VertexSet min_vertex_cover_exact(const Graph& g, const SearchBudget& budget);

/// Minimum offensive alliance bounded by the vertex cover number: computes
/// vc(G) exactly, then runs solve_branching with r = max(vc, 1).
SolveOutcome solve_via_vertex_cover(const Graph& g, const SearchBudget& budget);

class BudgetExhaustedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

/// Counts work units and polls the clock every few thousand units.
class BudgetMeter {
 public:
  explicit BudgetMeter(const SearchBudget& budget);
  /// Returns false once either limit is exceeded.
  bool tick();
  std::uint64_t used() const noexcept { return used_; }
  bool exhausted() const noexcept { return exhausted_; }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t used_ = 0;
  bool exhausted_ = false;
};

}  // namespace detail

}  // namespace oa
