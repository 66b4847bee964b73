#include "oa/errors.hpp"
#include "oa/solvers.hpp"

namespace oa {

void SearchBudget::validate() const {
  if (max_candidates == 0 || !(max_seconds > 0.0))
    throw PreconditionError("search budget limits must be positive");
}

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::found: return "found";
    case SolveStatus::none_within_bound: return "none_within_bound";
    case SolveStatus::budget_exhausted: return "budget_exhausted";
  }
  return "unknown";
}

namespace detail {

BudgetMeter::BudgetMeter(const SearchBudget& budget)
    : budget_(budget), start_(std::chrono::steady_clock::now()) {
  budget_.validate();
}

bool BudgetMeter::tick() {
  if (exhausted_) return false;
  if (++used_ > budget_.max_candidates) {
    exhausted_ = true;
    return false;
  }
  if ((used_ & 0xfff) == 0) {
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
    if (elapsed.count() > budget_.max_seconds) {
      exhausted_ = true;
      return false;
    }
  }
  return true;
}

}  // namespace detail
}  // namespace oa
