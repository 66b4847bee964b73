#include "oa/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <random>

#include "oa/errors.hpp"
#include "oa/generators.hpp"
#include "oa/structure.hpp"

namespace oa {

namespace {

// Every reduction is run as a chain of stages; single reductions have one.
using Stages = MrssPipeline;

Stages single(ReducedInstance ri) {
  Stages s;
  s.stages.push_back(std::move(ri));
  return s;
}

Json check(std::string name, bool ok) { return Json{{"check", std::move(name)}, {"ok", ok}}; }

template <class Src, class Wit>
struct Recipe {
  std::function<Src(const Json&)> parse;
  std::function<Json(const Src&)> write;
  std::function<Wit(const Json&)> read_witness;
  std::function<Json(const Wit&)> write_witness;
  /// Witness of a yes-instance or nullopt. May throw DeskScaleError or BudgetExhaustedError.
  std::function<std::optional<Wit>(const Src&, const HarnessOptions&)> oracle;
  std::function<bool(const Src&, const Wit&)> valid;
  std::function<Stages(const Src&, const ReductionOptions&)> reduce;
  std::function<LiftReport(const Src&, const Stages&, const Wit&)> lift;
  std::function<std::optional<Wit>(const Src&, const Stages&, const VertexSet&)> project;
  bool exact_roundtrip = false;
  std::function<void(const Src&, const ReducedInstance&, std::vector<Json>&)> structure;
};

class Runner {
 public:
  virtual ~Runner() = default;
  virtual std::vector<CheckReport> run(const std::vector<Tier>& tiers, const SourceCase& c,
                                       const HarnessOptions& opts) const = 0;
};

struct TargetDecision {
  SolveStatus status = SolveStatus::budget_exhausted;
  VertexSet solution;
  std::string method;
  double candidates = 0;
};

TargetDecision decide(const AllianceInstance& inst, const HarnessOptions& opts) {
  TargetDecision d;
  d.candidates = enumeration_count(inst);
  SolveOutcome out;
  if (d.candidates <= opts.enumeration_limit) {
    d.method = "bruteforce";
    SearchBudget budget = opts.budget;
    budget.max_candidates = std::max<std::uint64_t>(budget.max_candidates, static_cast<std::uint64_t>(d.candidates) + 1);
    out = solve_bruteforce(inst, budget);
  } else if (opts.equiv_solver == EquivSolver::brute_then_branch) {
    d.method = "branching";
    out = solve_branching(inst, opts.budget);
  } else {
    d.method = "none";
    return d;
  }
  d.status = out.status;
  d.solution = std::move(out.solution);
  return d;
}

template <class Src, class Wit>
class TypedRunner : public Runner {
 public:
  explicit TypedRunner(Recipe<Src, Wit> recipe) : recipe_(std::move(recipe)) {}

  std::vector<CheckReport> run(const std::vector<Tier>& tiers, const SourceCase& c,
                               const HarnessOptions& opts) const override {
    const Src src = recipe_.parse(c.source);
    const std::string source_digest = digest(recipe_.write(src));
    std::vector<CheckReport> reports;
    auto start = std::chrono::steady_clock::now();
    auto stamp = [&](CheckReport& r) {
      const auto now = std::chrono::steady_clock::now();
      r.seconds = std::chrono::duration<double>(now - start).count();
      start = now;
    };
    auto blank = [&](Tier tier) {
      CheckReport r;
      r.reduction = c.reduction;
      r.source_digest = source_digest;
      r.tier = tier;
      r.seed = c.seed;
      return r;
    };

    std::optional<Stages> target;
    std::string build_error;
    try {
      target = recipe_.reduce(src, opts.reduction);
    } catch (const DeskScaleError& e) {
      build_error = e.what();
    }

    std::optional<Wit> witness;
    bool witness_known = false;
    auto get_witness = [&]() -> const std::optional<Wit>& {
      if (!witness_known) {
        witness = c.witness.is_null() ? recipe_.oracle(src, opts) : std::optional<Wit>(recipe_.read_witness(c.witness));
        witness_known = true;
      }
      return witness;
    };

    for (Tier tier : tiers) {
      CheckReport r = blank(tier);
      if (!target) {
        r.verdict = Verdict::budget;
        r.details.push_back(Json{{"check", "build"}, {"ok", false}, {"note", build_error}});
      } else {
        try {
          switch (tier) {
            case Tier::lift: lift_tier(r, src, *target, get_witness()); break;
            case Tier::roundtrip: roundtrip_tier(r, src, *target, get_witness()); break;
            case Tier::equiv: equiv_tier(r, src, *target, opts); break;
          }
        } catch (const DeskScaleError& e) {
          r.verdict = Verdict::budget;
          r.details.push_back(Json{{"check", "oracle"}, {"ok", false}, {"note", e.what()}});
        } catch (const BudgetExhaustedError& e) {
          r.verdict = Verdict::budget;
          r.details.push_back(Json{{"check", "oracle"}, {"ok", false}, {"note", e.what()}});
        }
      }
      stamp(r);
      reports.push_back(std::move(r));
    }
    return reports;
  }

 private:
  static void fail_if(CheckReport& r, const Json& d) {
    if (!d.at("ok").template get<bool>()) r.verdict = Verdict::fail;
    r.details.push_back(d);
  }

  // Runs the lift and records it; returns the lifted set when it verified.
  std::optional<VertexSet> lift_and_record(CheckReport& r, const Src& src, const Stages& target,
                                           const std::optional<Wit>& w) const {
    if (!w) throw PreconditionError("source is a no-instance; there is no witness to lift");
    Json given = check("source_witness", recipe_.valid(src, *w));
    given["witness"] = recipe_.write_witness(*w);
    fail_if(r, given);
    const LiftReport lifted = recipe_.lift(src, target, *w);
    Json d = check("lift", lifted.ok());
    d["size"] = lifted.lifted.size();
    d["bound"] = lifted.bound;
    if (!lifted.ok()) {
      d["lifted"] = to_json(lifted.lifted);
      d["verification"] = to_json(lifted.verification);
    }
    fail_if(r, d);
    if (!lifted.ok()) return std::nullopt;
    return lifted.lifted;
  }

  void lift_tier(CheckReport& r, const Src& src, const Stages& target, const std::optional<Wit>& w) const {
    lift_and_record(r, src, target, w);
    const ReducedInstance& out = target.result();
    for (const auto& stage : target.stages) {
      for (const auto& p : stage.provenance.parameters) {
        if (p.reduction != stage.provenance.reduction) continue;
        const long long again = reevaluate(p);
        Json d = check("formula " + p.reduction + "/" + p.name, again == p.value);
        d["recorded"] = p.value;
        d["formula"] = p.formula;
        d["reevaluated"] = again;
        if (p.name == "r") {
          d["ok"] = again == p.value && static_cast<long long>(stage.instance.r) == p.value;
          d["instance_r"] = stage.instance.r;
        }
        if (p.name == "cover" && stage.declared_cover) {
          d["ok"] = again == p.value && is_vertex_cover(stage.instance.graph, *stage.declared_cover);
        }
        fail_if(r, d);
      }
    }
    if (recipe_.structure) {
      std::vector<Json> claims;
      recipe_.structure(src, out, claims);
      for (const auto& d : claims) fail_if(r, d);
    }
  }

  void roundtrip_tier(CheckReport& r, const Src& src, const Stages& target, const std::optional<Wit>& w) const {
    if (!recipe_.project) {
      r.details.push_back(Json{{"check", "roundtrip"}, {"ok", true}, {"note", "no projection defined; tier skipped"}});
      return;
    }
    const auto lifted = lift_and_record(r, src, target, w);
    if (!lifted) return;
    const std::optional<Wit> back = recipe_.project(src, target, *lifted);
    Json d = check("projection", back && recipe_.valid(src, *back));
    if (back) d["projected"] = recipe_.write_witness(*back);
    fail_if(r, d);
    if (recipe_.exact_roundtrip) {
      Json same = check("projection_identity", back && recipe_.write_witness(*back) == recipe_.write_witness(*w));
      fail_if(r, same);
    }
  }

  void equiv_tier(CheckReport& r, const Src& src, const Stages& target, const HarnessOptions& opts) const {
    const bool source_yes = recipe_.oracle(src, opts).has_value();
    const TargetDecision t = decide(target.result().instance, opts);
    Json d{{"check", "equivalence"},
           {"source", source_yes},
           {"method", t.method},
           {"candidates", t.candidates}};
    if (t.status == SolveStatus::budget_exhausted) {
      d["ok"] = false;
      d["note"] = t.method == "none" ? "enumeration exceeds the limit" : "target search exhausted its budget";
      r.verdict = Verdict::budget;
      r.details.push_back(d);
      return;
    }
    const bool target_yes = t.status == SolveStatus::found;
    d["target"] = target_yes;
    d["ok"] = source_yes == target_yes;
    if (target_yes) d["target_solution"] = to_json(t.solution);
    fail_if(r, d);
  }

  Recipe<Src, Wit> recipe_;
};

// ---- witness codecs

Json indices_json(const std::vector<std::size_t>& v) { return Json(v); }
std::vector<std::size_t> indices_from(const Json& j) {
  auto v = j.get<std::vector<std::size_t>>();
  std::sort(v.begin(), v.end());
  return v;
}

std::optional<VertexSet> to_optional(std::optional<VertexSet> s) { return s; }

// ---- stage sources

ReducedInstance stage_source(const Json& j) {
  VertexSet modulator;
  if (j.contains("modulator")) modulator = vertex_set_from_json(j.at("modulator"));
  return as_reduced(alliance_from_json(j), std::move(modulator));
}

Json stage_json(const ReducedInstance& ri) {
  Json j = to_json(ri.instance);
  if (!ri.modulator.empty()) j["modulator"] = to_json(ri.modulator);
  return j;
}

std::optional<VertexSet> alliance_oracle(const AllianceInstance& inst, const HarnessOptions& opts) {
  HarnessOptions forced = opts;
  forced.equiv_solver = EquivSolver::brute_then_branch;
  const TargetDecision d = decide(inst, forced);
  if (d.status == SolveStatus::budget_exhausted) throw BudgetExhaustedError("alliance source search exhausted its budget");
  if (d.status == SolveStatus::found) return d.solution;
  return std::nullopt;
}

void height_claim(const ReducedInstance& out, std::size_t limit, std::vector<Json>& claims) {
  if (out.modulator.empty()) return;
  const auto height = forest_height_after_deletion(out.instance.graph, out.modulator);
  Json d = check("forest_height", height && *height <= limit);
  d["limit"] = limit;
  d["height"] = height ? Json(*height) : Json(nullptr);
  d["modulator_size"] = out.modulator.size();
  claims.push_back(d);
}

void forbidden_claim(const ReducedInstance& out, std::vector<Json>& claims) {
  const auto report = validate_forbidden_structure(out.instance.graph, out.instance.forbidden);
  Json d = check("forbidden_structure", report.valid());
  if (!report.valid()) d["report"] = to_json(report);
  claims.push_back(d);
}

Recipe<ReducedInstance, VertexSet> stage_recipe(std::function<ReducedInstance(const ReducedInstance&, const ReductionOptions&)> reduce,
                                            std::function<LiftReport(const ReducedInstance&, const VertexSet&)> lift,
                                            std::function<void(const ReducedInstance&, std::vector<Json>&)> structure) {
  Recipe<ReducedInstance, VertexSet> s;
  s.parse = stage_source;
  s.write = stage_json;
  s.read_witness = vertex_set_from_json;
  s.write_witness = [](const VertexSet& v) { return to_json(v); };
  s.oracle = [](const ReducedInstance& src, const HarnessOptions& opts) { return alliance_oracle(src.instance, opts); };
  s.valid = [](const ReducedInstance& src, const VertexSet& w) { return check_instance_solution(src.instance, w).valid(); };
  s.reduce = [reduce](const ReducedInstance& src, const ReductionOptions& o) { return single(reduce(src, o)); };
  s.lift = [lift](const ReducedInstance&, const Stages& t, const VertexSet& w) { return lift(t.result(), w); };
  s.project = [](const ReducedInstance&, const Stages& t, const VertexSet& a) {
    return std::optional<VertexSet>(project_to_source(t.result(), a));
  };
  s.structure = [structure](const ReducedInstance&, const ReducedInstance& out, std::vector<Json>& claims) {
    if (structure) structure(out, claims);
  };
  return s;
}

std::optional<VertexSet> vc_witness(const VcInstance& inst) { return oracle_vertex_cover(inst); }

bool valid_cover(const VcInstance& inst, const VertexSet& c) {
  return c.size() <= inst.k && std::all_of(c.begin(), c.end(), [&](Vertex v) { return v < inst.graph.order(); }) &&
         is_vertex_cover(inst.graph, c);
}

bool valid_domination(const Graph& g, std::size_t k, const VertexSet& d) {
  return d.size() <= k && std::all_of(d.begin(), d.end(), [&](Vertex v) { return v < g.order(); }) &&
         is_dominating_set(g, d);
}

using RunnerMap = std::map<std::string, std::unique_ptr<Runner>, std::less<>>;

template <class Src, class Wit>
void add(RunnerMap& m, const std::string& name, Recipe<Src, Wit> recipe) {
  m.emplace(name, std::make_unique<TypedRunner<Src, Wit>>(std::move(recipe)));
}

Recipe<MrssInstance, std::vector<std::size_t>> mrss_base() {
  Recipe<MrssInstance, std::vector<std::size_t>> s;
  s.parse = mrss_from_json;
  s.write = [](const MrssInstance& i) { return to_json(i); };
  s.read_witness = indices_from;
  s.write_witness = indices_json;
  s.oracle = [](const MrssInstance& i, const HarnessOptions&) { return oracle_mrss(i); };
  s.valid = is_mrss_witness;
  s.exact_roundtrip = true;
  return s;
}

Recipe<VcInstance, VertexSet> vc_base() {
  Recipe<VcInstance, VertexSet> s;
  s.parse = vc_from_json;
  s.write = [](const VcInstance& i) { return to_json(i); };
  s.read_witness = vertex_set_from_json;
  s.write_witness = [](const VertexSet& v) { return to_json(v); };
  s.oracle = [](const VcInstance& i, const HarnessOptions&) { return vc_witness(i); };
  s.valid = valid_cover;
  return s;
}

RunnerMap build_runners() {
  RunnerMap m;

  {
    auto s = mrss_base();
    s.reduce = [](const MrssInstance& i, const ReductionOptions& o) { return single(mrss_to_soafn(i, o)); };
    s.lift = [](const MrssInstance& i, const Stages& t, const std::vector<std::size_t>& w) {
      return lift_mrss(i, t.result(), w);
    };
    s.project = [](const MrssInstance&, const Stages& t, const VertexSet& a) {
      return std::optional<std::vector<std::size_t>>(project_mrss(t.result(), a));
    };
    s.structure = [](const MrssInstance&, const ReducedInstance& out, std::vector<Json>& claims) {
      height_claim(out, 5, claims);
      forbidden_claim(out, claims);
    };
    add(m, "mrss-soafn", s);
  }
  {
    auto s = mrss_base();
    s.reduce = [](const MrssInstance& i, const ReductionOptions& o) { return mrss_to_oa_pipeline(i, o); };
    s.lift = [](const MrssInstance& i, const Stages& t, const std::vector<std::size_t>& w) {
      return lift_pipeline(i, t, w);
    };
    s.project = [](const MrssInstance&, const Stages& t, const VertexSet& a) {
      return std::optional<std::vector<std::size_t>>(project_pipeline(t, a));
    };
    s.structure = [](const MrssInstance&, const ReducedInstance& out, std::vector<Json>& claims) {
      height_claim(out, 7, claims);
      claims.push_back(check("no_constraints", out.instance.forbidden.empty() && out.instance.necessary.empty() &&
                                                   out.instance.strength == 1));
    };
    add(m, "mrss-oa", s);
  }
  add(m, "collapse",
      stage_recipe([](const ReducedInstance& in, const ReductionOptions&) { return collapse_necessary(in); },
                                  lift_collapse, nullptr));
  add(m, "soafn-oaf",
      stage_recipe([](const ReducedInstance& in, const ReductionOptions&) { return soafn_to_oaf(in); },
                                  lift_soafn_oaf, [](const ReducedInstance& out, std::vector<Json>& claims) {
                                    height_claim(out, 5, claims);
                                    forbidden_claim(out, claims);
                                  }));
  add(m, "oaf-oa",
      stage_recipe([](const ReducedInstance& in, const ReductionOptions& o) { return oaf_to_oa(in, o); },
                                  lift_oaf_oa, [](const ReducedInstance& out, std::vector<Json>& claims) {
                                    height_claim(out, 7, claims);
                                    claims.push_back(check("no_constraints", out.instance.forbidden.empty() &&
                                                                                 out.instance.necessary.empty()));
                                  }));
  {
    Recipe<PhsInstance, Permutation> s;
    s.parse = phs_from_json;
    s.write = [](const PhsInstance& i) { return to_json(i); };
    s.read_witness = [](const Json& j) { return j.get<Permutation>(); };
    s.write_witness = [](const Permutation& p) { return Json(p); };
    s.oracle = [](const PhsInstance& i, const HarnessOptions&) { return oracle_phs(i); };
    s.valid = is_permutation_hitting_set;
    s.reduce = [](const PhsInstance& i, const ReductionOptions& o) { return single(phs_to_oa(i, o)); };
    s.lift = [](const PhsInstance&, const Stages& t, const Permutation& p) { return lift_phs(t.result(), p); };
    s.project = [](const PhsInstance& i, const Stages& t, const VertexSet& a) {
      return cells_to_permutation(project_phs(t.result(), a), i.k);
    };
    add(m, "phs-oa", s);
  }
  {
    Recipe<ClosestStringInstance, std::string> s;
    s.parse = closest_string_from_json;
    s.write = [](const ClosestStringInstance& i) { return to_json(i); };
    s.read_witness = [](const Json& j) { return j.get<std::string>(); };
    s.write_witness = [](const std::string& y) { return Json(y); };
    s.oracle = [](const ClosestStringInstance& i, const HarnessOptions&) { return oracle_closest_string(i); };
    s.valid = [](const ClosestStringInstance& i, const std::string& y) { return is_central_string(i, y); };
    s.reduce = [](const ClosestStringInstance& i, const ReductionOptions& o) { return single(closest_string_to_oa(i, o)); };
    s.lift = [](const ClosestStringInstance& i, const Stages& t, const std::string& y) {
      return lift_closest_string(i, t.result(), y);
    };
    s.project = [](const ClosestStringInstance& i, const Stages& t, const VertexSet& a) {
      return std::optional<std::string>(project_closest_string(i, t.result(), a));
    };
    add(m, "cs-oa", s);
  }
  {
    auto s = vc_base();
    s.reduce = [](const VcInstance& i, const ReductionOptions& o) { return single(vc3_to_oa_bipartite(i, o)); };
    s.lift = [](const VcInstance&, const Stages& t, const VertexSet& c) { return lift_vc_bipartite(t.result(), c); };
    s.project = [](const VcInstance&, const Stages& t, const VertexSet& a) {
      return to_optional(project_vc_bipartite(t.result(), a));
    };
    s.structure = [](const VcInstance&, const ReducedInstance& out, std::vector<Json>& claims) {
      claims.push_back(check("bipartition_witness",
                             out.bipartition && verify_bipartition(out.instance.graph, *out.bipartition)));
      claims.push_back(check("is_bipartite", is_bipartite(out.instance.graph).has_value()));
    };
    add(m, "vc-bipartite", s);
  }
  {
    auto s = vc_base();
    s.reduce = [](const VcInstance& i, const ReductionOptions& o) { return single(vc3_to_oa_split(i, o)); };
    s.lift = [](const VcInstance&, const Stages& t, const VertexSet& c) { return lift_vc_split(t.result(), c); };
    s.project = [](const VcInstance&, const Stages& t, const VertexSet& a) {
      return to_optional(project_vc_split(t.result(), a));
    };
    s.structure = [](const VcInstance&, const ReducedInstance& out, std::vector<Json>& claims) {
      claims.push_back(check("split_witness", out.split && verify_split_partition(out.instance.graph, *out.split)));
      claims.push_back(check("is_split", is_split(out.instance.graph).has_value()));
    };
    add(m, "vc-split", s);
  }
  {
    Recipe<DsInstance, VertexSet> s;
    s.parse = ds_from_json;
    s.write = [](const DsInstance& i) { return to_json(i); };
    s.read_witness = vertex_set_from_json;
    s.write_witness = [](const VertexSet& v) { return to_json(v); };
    s.oracle = [](const DsInstance& i, const HarnessOptions&) { return oracle_dominating_set(i); };
    s.valid = [](const DsInstance& i, const VertexSet& d) { return valid_domination(i.graph, i.k, d); };
    s.reduce = [](const DsInstance& i, const ReductionOptions& o) { return single(pds_to_soa_apex(i, o)); };
    s.lift = [](const DsInstance&, const Stages& t, const VertexSet& d) { return lift_apex(t.result(), d); };
    s.project = [](const DsInstance&, const Stages& t, const VertexSet& a) {
      return to_optional(project_apex(t.result(), a));
    };
    s.structure = [](const DsInstance&, const ReducedInstance& out, std::vector<Json>& claims) {
      claims.push_back(check("apex_edge_bound", apex_edge_bound_holds(out)));
    };
    add(m, "pds-apex", s);
  }
  {
    Recipe<CircleDsInstance, VertexSet> s;
    s.parse = circle_ds_from_json;
    s.write = [](const CircleDsInstance& i) { return to_json(i); };
    s.read_witness = vertex_set_from_json;
    s.write_witness = [](const VertexSet& v) { return to_json(v); };
    s.oracle = [](const CircleDsInstance& i, const HarnessOptions&) {
      return oracle_dominating_set(DsInstance{chord_diagram_to_graph(i.diagram), i.k});
    };
    s.valid = [](const CircleDsInstance& i, const VertexSet& d) {
      return valid_domination(chord_diagram_to_graph(i.diagram), i.k, d);
    };
    s.reduce = [](const CircleDsInstance& i, const ReductionOptions& o) { return single(circle_ds_to_oa(i, o)); };
    s.lift = [](const CircleDsInstance&, const Stages& t, const VertexSet& d) { return lift_circle(t.result(), d); };
    s.project = [](const CircleDsInstance&, const Stages& t, const VertexSet& a) {
      return to_optional(project_circle(t.result(), a));
    };
    s.structure = [](const CircleDsInstance&, const ReducedInstance& out, std::vector<Json>& claims) {
      claims.push_back(check("diagram_realizes_graph",
                             out.diagram && chord_diagram_to_graph(*out.diagram) == out.instance.graph));
    };
    add(m, "ds-circle", s);
  }
  return m;
}

const RunnerMap& runners() {
  static const RunnerMap m = build_runners();
  return m;
}

// ---- case generation

MrssInstance yes_mrss(std::mt19937_64& rng, std::vector<std::size_t>& witness) {
  while (true) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const auto max_entry = std::uniform_int_distribution<std::uint32_t>(1, 2)(rng);
    MrssInstance inst = gen_random_mrss(k, n, max_entry, rng());
    if (auto w = oracle_mrss(inst)) {
      witness = *w;
      return inst;
    }
  }
}

}  // namespace

std::string_view to_string(Tier tier) {
  switch (tier) {
    case Tier::lift: return "lift";
    case Tier::roundtrip: return "roundtrip";
    case Tier::equiv: return "equiv";
  }
  return "?";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::budget: return "budget";
  }
  return "?";
}

Tier tier_from_string(std::string_view name) {
  for (Tier t : {Tier::lift, Tier::roundtrip, Tier::equiv})
    if (to_string(t) == name) return t;
  throw PreconditionError("unknown tier '" + std::string(name) + "'");
}

Json to_json(const CheckReport& report) {
  Json j{{"reduction", report.reduction},
         {"source_digest", report.source_digest},
         {"tier", std::string(to_string(report.tier))},
         {"verdict", std::string(to_string(report.verdict))}};
  j["seed"] = report.seed ? Json(*report.seed) : Json(nullptr);
  j["details"] = report.details;
  j["seconds"] = report.seconds;
  return j;
}

const std::vector<std::string>& reduction_names() {
  static const std::vector<std::string> names{"mrss-soafn", "collapse", "soafn-oaf", "oaf-oa",       "mrss-oa",  "phs-oa",
                                              "cs-oa",      "vc-bipartite", "vc-split",  "pds-apex", "ds-circle"};
  return names;
}

bool is_reduction_name(std::string_view name) { return runners().find(name) != runners().end(); }

double enumeration_count(const AllianceInstance& inst) {
  const double free = static_cast<double>(inst.graph.order() - inst.forbidden.size() - inst.necessary.size());
  if (inst.r < inst.necessary.size()) return 0;
  const std::size_t extra = inst.r - inst.necessary.size();
  auto choose = [&](std::size_t i) {
    return std::exp(std::lgamma(free + 1) - std::lgamma(static_cast<double>(i) + 1) -
                    std::lgamma(free - static_cast<double>(i) + 1));
  };
  if (inst.exact) return extra <= free ? choose(extra) : 0;
  double total = 0;
  for (std::size_t i = 0; i <= extra && static_cast<double>(i) <= free; ++i) total += choose(i);
  return std::round(total);
}

SourceCase generate_case(const std::string& reduction, std::uint64_t seed) {
  if (!is_reduction_name(reduction)) throw PreconditionError("unknown reduction '" + reduction + "'");
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  SourceCase c;
  c.reduction = reduction;
  c.seed = seed;

  if (reduction == "mrss-soafn" || reduction == "collapse" || reduction == "soafn-oaf") {
    std::vector<std::size_t> w;
    const MrssInstance inst = yes_mrss(rng, w);
    if (reduction == "mrss-soafn") {
      c.source = to_json(inst);
      c.witness = Json(w);
      return c;
    }
    ReducedInstance stage = mrss_to_soafn(inst);
    VertexSet lifted = lift_mrss(inst, stage, w).lifted;
    if (reduction == "soafn-oaf") {
      ReducedInstance next = collapse_necessary(stage);
      lifted = lift_collapse(next, lifted).lifted;
      stage = std::move(next);
    }
    c.source = stage_json(stage);
    c.witness = to_json(lifted);
  } else if (reduction == "oaf-oa") {
    const AllianceInstance inst = gen_random_oaf(pick(2, 6), pick(1, 2), 4, rng());
    c.source = to_json(inst);
    c.witness = to_json(solve_bruteforce(inst, SearchBudget{}).solution);
  } else if (reduction == "mrss-oa") {
    // The smallest source already yields ~10^8 target vertices.
    c.source = to_json(MrssInstance{1, 1, {{1}}, {1}});
    c.witness = Json(std::vector<std::size_t>{0});
  } else if (reduction == "phs-oa") {
    c.source = to_json(gen_random_phs(pick(2, 3), pick(1, 4), rng()));
  } else if (reduction == "cs-oa") {
    const std::size_t n = pick(2, 5);
    c.source = to_json(gen_random_strings(pick(2, 4), n, pick(1, n - 1), rng()));
  } else if (reduction == "vc-bipartite" || reduction == "vc-split") {
    c.source = to_json(gen_random_vc3(pick(2, 7), rng()));
  } else if (reduction == "pds-apex") {
    c.source = to_json(gen_random_grid_subgraph(pick(2, 3), pick(2, 4), 0.3, rng()));
  } else if (reduction == "ds-circle") {
    c.source = to_json(gen_random_circle(pick(3, 6), rng()));
  }
  return c;
}

std::vector<CheckReport> run_checks(const SourceCase& c, const std::vector<Tier>& tiers, const HarnessOptions& opts) {
  const auto it = runners().find(c.reduction);
  if (it == runners().end()) throw PreconditionError("unknown reduction '" + c.reduction + "'");
  return it->second->run(tiers, c, opts);
}

CheckReport run_check(Tier tier, const SourceCase& c, const HarnessOptions& opts) {
  return run_checks(c, {tier}, opts).front();
}

CheckReport run_lift_check(const SourceCase& c, const HarnessOptions& opts) { return run_check(Tier::lift, c, opts); }
CheckReport run_roundtrip_check(const SourceCase& c, const HarnessOptions& opts) {
  return run_check(Tier::roundtrip, c, opts);
}
CheckReport run_equiv_check(const SourceCase& c, const HarnessOptions& opts) { return run_check(Tier::equiv, c, opts); }

SuiteReport run_suite(const SuiteOptions& opts) {
  SuiteReport suite;
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
  for (const auto& name : opts.reductions) {
    const std::size_t cases = name == "mrss-oa" ? opts.pipeline_cases : opts.cases;
    for (std::size_t i = 0; i < cases; ++i) {
      if (elapsed() > opts.time_ceiling_seconds) {
        suite.timed_out = true;
        return suite;
      }
      const SourceCase c = generate_case(name, opts.first_seed + i);
      for (auto& r : run_checks(c, opts.tiers, opts.harness)) {
        switch (r.verdict) {
          case Verdict::pass: ++suite.passed; break;
          case Verdict::fail: ++suite.failed; break;
          case Verdict::budget: ++suite.budget; break;
        }
        suite.reports.push_back(std::move(r));
      }
    }
  }
  return suite;
}

Json to_json(const SuiteReport& report) {
  Json reports = Json::array();
  for (const auto& r : report.reports) reports.push_back(to_json(r));
  return Json{{"passed", report.passed},
              {"failed", report.failed},
              {"budget", report.budget},
              {"timed_out", report.timed_out},
              {"reports", reports}};
}

}  // namespace oa
