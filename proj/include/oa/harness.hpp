#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oa/json_io.hpp"
#include "oa/reductions.hpp"
#include "oa/solvers.hpp"

namespace oa {

enum class Tier { lift, roundtrip, equiv };
enum class Verdict { pass, fail, budget };

std::string_view to_string(Tier tier);
std::string_view to_string(Verdict verdict);
/// Throws PreconditionError for an unknown name.
Tier tier_from_string(std::string_view name);

/// How the target side of an equivalence check is decided.
enum class EquivSolver {
  /// Size-bounded enumeration only; verdict budget when it is too large.
  brute_only,
  /// Falls back to solve_branching when enumeration is too large.
  brute_then_branch,
};

struct HarnessOptions {
  SearchBudget budget;
  /// Largest number of candidate subsets the equivalence tier will enumerate.
  double enumeration_limit = 1e8;
  EquivSolver equiv_solver = EquivSolver::brute_only;
  ReductionOptions reduction;
};

/// One source instance for a named reduction. `witness` is null when the
/// source oracle should supply it. Stage reductions (collapse, soafn-oaf,
/// oaf-oa) take an alliance document, optionally with a "modulator" list.
struct SourceCase {
  std::string reduction;
  Json source;
  Json witness;
  std::optional<std::uint64_t> seed;
};

struct CheckReport {
  std::string reduction;
  std::string source_digest;
  Tier tier = Tier::lift;
  Verdict verdict = Verdict::pass;
  std::optional<std::uint64_t> seed;
  /// Per-check records {"check", "ok", ...}; failing records carry the violating object.
  std::vector<Json> details;
  double seconds = 0.0;

  bool passed() const noexcept { return verdict == Verdict::pass; }
};

Json to_json(const CheckReport& report);

/// mrss-soafn, collapse, soafn-oaf, oaf-oa, mrss-oa, phs-oa, cs-oa,
/// vc-bipartite, vc-split, pds-apex, ds-circle.
const std::vector<std::string>& reduction_names();
bool is_reduction_name(std::string_view name);

/// Desk-scale source for the reduction, deterministic per seed. Stage
/// reductions are fed by earlier MRSS stages (witness included); oaf-oa by
/// gen_random_oaf.
SourceCase generate_case(const std::string& reduction, std::uint64_t seed);

/// Lift tier: lifts the witness (or the oracle's) and verifies it in the
/// target together with the parameter record and the structural claims.
CheckReport run_lift_check(const SourceCase& c, const HarnessOptions& opts = {});
/// Round-trip tier: projects the lifted set back and validates it in the source.
CheckReport run_roundtrip_check(const SourceCase& c, const HarnessOptions& opts = {});
/// Equivalence tier: source oracle decision against the target decision.
CheckReport run_equiv_check(const SourceCase& c, const HarnessOptions& opts = {});
CheckReport run_check(Tier tier, const SourceCase& c, const HarnessOptions& opts = {});
/// Builds the target once and runs each tier on it.
std::vector<CheckReport> run_checks(const SourceCase& c, const std::vector<Tier>& tiers,
                                    const HarnessOptions& opts = {});

/// Sum of C(free, i) for the sizes an enumeration of `inst` would visit.
double enumeration_count(const AllianceInstance& inst);

struct SuiteOptions {
  std::vector<std::string> reductions = reduction_names();
  std::vector<Tier> tiers{Tier::lift, Tier::roundtrip, Tier::equiv};
  std::uint64_t first_seed = 1;
  std::size_t cases = 50;
  /// mrss-oa materializes ~10^8 vertices per case, so it gets its own count.
  std::size_t pipeline_cases = 1;
  double time_ceiling_seconds = 1800.0;
  HarnessOptions harness;
};

struct SuiteReport {
  std::vector<CheckReport> reports;
  std::size_t passed = 0, failed = 0, budget = 0;
  bool timed_out = false;
};

SuiteReport run_suite(const SuiteOptions& opts);
Json to_json(const SuiteReport& report);

}  // namespace oa
