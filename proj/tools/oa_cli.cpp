#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "oa/errors.hpp"
#include "oa/generators.hpp"
#include "oa/harness.hpp"
#include "oa/json_io.hpp"
#include "oa/reductions.hpp"
#include "oa/solvers.hpp"

namespace {

// Exit codes: 0 pass/found, 1 fail/invalid, 2 bad input, 3 no solution within bound, 4 budget.
constexpr int kPass = 0, kFail = 1, kInputError = 2, kNone = 3, kBudget = 4;

struct Globals {
  std::optional<std::uint64_t> seed;
  std::uint64_t budget_nodes = 100'000'000;
  double budget_secs = 60.0;
  bool json = false;

  oa::SearchBudget budget() const {
    oa::SearchBudget b{budget_nodes, budget_secs};
    b.validate();
    return b;
  }
};

oa::Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw oa::PreconditionError("cannot open " + path);
  return oa::Json::parse(in);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw oa::PreconditionError("cannot write " + path);
  out << text;
}

oa::Graph read_graph_file(const std::string& path, bool quiet) {
  std::ifstream in(path);
  if (!in) throw oa::PreconditionError("cannot open " + path);
  auto parsed = oa::read_edge_list(in);
  if (parsed.duplicates_collapsed() && !quiet)
    std::cerr << "warning: " << parsed.duplicate_edges << " duplicate edge(s) collapsed\n";
  return std::move(parsed.graph);
}

// ---- verify

struct VerifyArgs {
  std::string graph, instance, set;
  int strength = 1;
  bool defensive = false;
};

int run_verify(const VerifyArgs& a, const Globals& g) {
  const oa::VertexSet s = oa::parse_vertex_list(a.set);
  oa::ViolationReport report;
  if (!a.instance.empty()) {
    report = oa::check_instance_solution(oa::alliance_from_json(read_json_file(a.instance)), s);
  } else {
    const oa::Graph graph = read_graph_file(a.graph, g.json);
    report = a.defensive ? oa::check_defensive(graph, s) : oa::check_offensive(graph, s, a.strength);
  }
  if (g.json) {
    std::cout << oa::to_json(report).dump(2) << '\n';
  } else {
    std::cout << (report.valid() ? "valid" : "invalid") << '\n';
    for (const auto& v : report.violations)
      std::cout << "  vertex " << v.vertex << ": inside " << v.inside << ", outside " << v.outside << ", slack "
                << v.slack << '\n';
    for (const auto& f : report.constraint_failures)
      std::cout << "  " << oa::to_string(f.kind) << ": " << f.detail << '\n';
  }
  return report.valid() ? kPass : kFail;
}

// ---- solve

struct SolveArgs {
  std::string graph, instance, method = "branch";
  std::size_t r = 0;
  int strength = 1;
};

int run_solve(const SolveArgs& a, const Globals& g) {
  oa::SolveOutcome out;
  if (a.method == "vc") {
    out = oa::solve_via_vertex_cover(read_graph_file(a.graph, g.json), g.budget());
  } else {
    oa::AllianceInstance inst;
    if (!a.instance.empty()) {
      inst = oa::alliance_from_json(read_json_file(a.instance));
    } else {
      inst.graph = read_graph_file(a.graph, g.json);
      inst.r = a.r == 0 ? inst.graph.order() : a.r;
      inst.strength = a.strength;
    }
    out = a.method == "brute" ? oa::solve_bruteforce(inst, g.budget()) : oa::solve_branching(inst, g.budget());
  }
  if (g.json) {
    oa::Json j{{"status", std::string(oa::to_string(out.status))}, {"work", out.work}};
    j["solution"] = out.found() ? oa::to_json(out.solution) : oa::Json(nullptr);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << oa::to_string(out.status);
    if (out.found()) std::cout << ' ' << out.solution.size() << ": " << oa::format_vertex_list(out.solution);
    std::cout << '\n';
  }
  switch (out.status) {
    case oa::SolveStatus::found: return kPass;
    case oa::SolveStatus::none_within_bound: return kNone;
    case oa::SolveStatus::budget_exhausted: return kBudget;
  }
  return kFail;
}

// ---- reduce

struct ReduceArgs {
  std::string name, in, out, roles, provenance, instance_out;
};

oa::Json provenance_json(const oa::ReducedInstance& ri) {
  oa::Json params = oa::Json::array();
  for (const auto& p : ri.provenance.parameters) {
    oa::Json inputs = oa::Json::object();
    for (const auto& [k, v] : p.inputs) inputs[k] = v;
    params.push_back({{"reduction", p.reduction}, {"name", p.name}, {"formula", p.formula}, {"inputs", inputs},
                      {"value", p.value}});
  }
  oa::Json j{{"reduction", ri.provenance.reduction},
             {"source_digest", ri.provenance.source_digest},
             {"parameters", params},
             {"r", ri.instance.r},
             {"strength", ri.instance.strength},
             {"order", ri.instance.graph.order()},
             {"size", ri.instance.graph.size()},
             {"modulator", oa::to_json(ri.modulator)}};
  if (!ri.instance.forbidden.empty()) j["forbidden"] = oa::to_json(ri.instance.forbidden);
  if (!ri.instance.necessary.empty()) j["necessary"] = oa::to_json(ri.instance.necessary);
  if (ri.diagram) j["diagram"] = ri.diagram->endpoints();
  if (ri.bipartition) j["bipartition"] = {{"left", oa::to_json(ri.bipartition->left)}, {"right", oa::to_json(ri.bipartition->right)}};
  if (ri.split) j["split"] = {{"clique", oa::to_json(ri.split->clique)}, {"independent", oa::to_json(ri.split->independent)}};
  if (ri.declared_cover) j["declared_cover"] = oa::to_json(*ri.declared_cover);
  return j;
}

oa::ReducedInstance reduce_by_name(const std::string& name, const oa::Json& src, const oa::ReductionOptions& opts) {
  auto stage_input = [&] {
    oa::VertexSet modulator;
    if (src.contains("modulator")) modulator = oa::vertex_set_from_json(src.at("modulator"));
    return oa::as_reduced(oa::alliance_from_json(src), modulator);
  };
  if (name == "mrss-soafn") return oa::mrss_to_soafn(oa::mrss_from_json(src), opts);
  if (name == "collapse") return oa::collapse_necessary(stage_input());
  if (name == "soafn-oaf") return oa::soafn_to_oaf(stage_input());
  if (name == "oaf-oa") return oa::oaf_to_oa(stage_input(), opts);
  if (name == "mrss-oa") {
    auto p = oa::mrss_to_oa_pipeline(oa::mrss_from_json(src), opts);
    return std::move(p.stages.back());
  }
  if (name == "phs-oa") return oa::phs_to_oa(oa::phs_from_json(src), opts);
  if (name == "cs-oa") return oa::closest_string_to_oa(oa::closest_string_from_json(src), opts);
  if (name == "vc-bipartite") return oa::vc3_to_oa_bipartite(oa::vc_from_json(src), opts);
  if (name == "vc-split") return oa::vc3_to_oa_split(oa::vc_from_json(src), opts);
  if (name == "pds-apex") return oa::pds_to_soa_apex(oa::ds_from_json(src), opts);
  if (name == "ds-circle") return oa::circle_ds_to_oa(oa::circle_ds_from_json(src), opts);
  throw oa::PreconditionError("unknown reduction '" + name + "'");
}

int run_reduce(const ReduceArgs& a, const Globals& g) {
  oa::ReductionOptions opts;
  opts.seed = g.seed;
  const oa::ReducedInstance ri = reduce_by_name(a.name, read_json_file(a.in), opts);
  std::ostringstream graph;
  oa::write_edge_list(graph, ri.instance.graph);
  write_text(a.out, graph.str());
  if (!a.roles.empty()) write_text(a.roles, oa::to_json(ri.roles).dump() + "\n");
  if (!a.provenance.empty()) write_text(a.provenance, provenance_json(ri).dump(2) + "\n");
  if (!a.instance_out.empty()) write_text(a.instance_out, oa::to_json(ri.instance).dump() + "\n");
  if (g.json) {
    std::cout << oa::Json{{"reduction", a.name},
                          {"order", ri.instance.graph.order()},
                          {"size", ri.instance.graph.size()},
                          {"r", ri.instance.r}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << a.name << ": " << ri.instance.graph.order() << " vertices, " << ri.instance.graph.size()
              << " edges, r = " << ri.instance.r << '\n';
  }
  return kPass;
}

// ---- check / suite

struct CheckArgs {
  std::string tier, reduction, in, witness;
  bool branch_fallback = false;
  double enumeration_limit = 1e8;
};

oa::HarnessOptions harness_options(const Globals& g, bool branch_fallback, double limit) {
  oa::HarnessOptions h;
  h.budget = g.budget();
  h.enumeration_limit = limit;
  h.equiv_solver = branch_fallback ? oa::EquivSolver::brute_then_branch : oa::EquivSolver::brute_only;
  h.reduction.seed = g.seed;
  return h;
}

int exit_for(oa::Verdict v) {
  switch (v) {
    case oa::Verdict::pass: return kPass;
    case oa::Verdict::fail: return kFail;
    case oa::Verdict::budget: return kBudget;
  }
  return kFail;
}

int run_check_verb(const CheckArgs& a, const Globals& g) {
  oa::SourceCase c;
  if (a.in.empty()) {
    c = oa::generate_case(a.reduction, g.seed.value_or(1));
  } else {
    c.reduction = a.reduction;
    c.source = read_json_file(a.in);
    if (!a.witness.empty()) c.witness = read_json_file(a.witness);
  }
  oa::HarnessOptions h = harness_options(g, a.branch_fallback, a.enumeration_limit);
  // Reduction choices stay at lowest identifiers unless the seed is meant for them.
  if (a.in.empty()) h.reduction.seed.reset();
  const oa::CheckReport r = oa::run_check(oa::tier_from_string(a.tier), c, h);
  if (g.json) {
    std::cout << oa::to_json(r).dump(2) << '\n';
  } else {
    std::cout << r.reduction << ' ' << oa::to_string(r.tier) << ": " << oa::to_string(r.verdict) << " ("
              << r.seconds << " s)\n";
    for (const auto& d : r.details)
      if (!d.at("ok").get<bool>()) std::cout << "  " << d.dump() << '\n';
  }
  return exit_for(r.verdict);
}

struct SuiteArgs {
  std::vector<std::string> reductions, tiers;
  std::size_t cases = 50, pipeline_cases = 1;
  double ceiling = 1800.0;
  bool branch_fallback = false;
};

int run_suite_verb(const SuiteArgs& a, const Globals& g) {
  oa::SuiteOptions s;
  if (!a.reductions.empty()) s.reductions = a.reductions;
  for (const auto& name : s.reductions)
    if (!oa::is_reduction_name(name)) throw oa::PreconditionError("unknown reduction '" + name + "'");
  if (!a.tiers.empty()) {
    s.tiers.clear();
    for (const auto& t : a.tiers) s.tiers.push_back(oa::tier_from_string(t));
  }
  s.first_seed = g.seed.value_or(1);
  s.cases = a.cases;
  s.pipeline_cases = a.pipeline_cases;
  s.time_ceiling_seconds = a.ceiling;
  s.harness = harness_options(g, a.branch_fallback, 1e8);
  s.harness.reduction.seed.reset();
  const oa::SuiteReport report = oa::run_suite(s);
  if (g.json) {
    std::cout << oa::to_json(report).dump(2) << '\n';
  } else {
    for (const auto& r : report.reports)
      if (r.verdict == oa::Verdict::fail)
        std::cout << "FAIL " << r.reduction << ' ' << oa::to_string(r.tier) << " seed " << r.seed.value_or(0) << '\n';
    std::cout << report.passed << " pass, " << report.failed << " fail, " << report.budget << " budget"
              << (report.timed_out ? " (time ceiling reached)" : "") << '\n';
  }
  if (report.failed > 0) return kFail;
  return report.timed_out ? kBudget : kPass;
}

// ---- gen

struct GenArgs {
  std::string kind;
  std::size_t n = 6, k = 2, sets = 3, d = 1, w = 3, h = 3, pairs = 1, max_r = 4;
  std::uint32_t max_entry = 2;
  double p = 0.4;
  std::string reduction;
};

int run_gen(const GenArgs& a, const Globals& g) {
  const std::uint64_t seed = g.seed.value_or(1);
  oa::Json out;
  if (a.kind == "graph") {
    oa::Graph graph = oa::gen_random_graph(a.n, a.p, seed);
    std::ostringstream text;
    oa::write_edge_list(text, graph);
    std::cout << text.str();
    return kPass;
  }
  if (a.kind == "vc3") out = oa::to_json(oa::gen_random_vc3(a.n, seed));
  else if (a.kind == "mrss") out = oa::to_json(oa::gen_random_mrss(a.k, a.n, a.max_entry, seed));
  else if (a.kind == "phs") out = oa::to_json(oa::gen_random_phs(a.k, a.sets, seed));
  else if (a.kind == "strings") out = oa::to_json(oa::gen_random_strings(a.k, a.n, a.d, seed));
  else if (a.kind == "cycle-diagram") out = oa::to_json(oa::gen_cycle_diagram(a.n));
  else if (a.kind == "circle") out = oa::to_json(oa::gen_random_circle(a.n, seed));
  else if (a.kind == "grid") out = oa::to_json(oa::gen_grid(a.w, a.h));
  else if (a.kind == "grid-subgraph") out = oa::to_json(oa::gen_random_grid_subgraph(a.w, a.h, a.p, seed));
  else if (a.kind == "oaf") out = oa::to_json(oa::gen_random_oaf(a.n, a.pairs, a.max_r, seed));
  else if (a.kind == "case") {
    const oa::SourceCase c = oa::generate_case(a.reduction, seed);
    out = {{"reduction", c.reduction}, {"seed", seed}, {"source", c.source}, {"witness", c.witness}};
  } else throw oa::PreconditionError("unknown generator '" + a.kind + "'");
  std::cout << out.dump(g.json ? 2 : -1) << '\n';
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Offensive alliance verifiers, solvers and reduction checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  std::uint64_t seed_value = 0;
  auto* seed_opt = app.add_option("--seed", seed_value, "Seed for generators and reduction choices");
  app.add_option("--budget-nodes", g.budget_nodes, "Candidate/branch-node limit for exponential searches");
  app.add_option("--budget-secs", g.budget_secs, "Wall-clock limit for exponential searches");
  app.add_flag("--json", g.json, "Machine-readable output");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check a vertex set against the alliance conditions");
  auto* vg = verify->add_option("--graph", va.graph, "Edge-list graph file");
  auto* vi = verify->add_option("--instance", va.instance, "Alliance instance JSON (checks all constraints)");
  vg->excludes(vi);
  verify->add_option("--set", va.set, "Comma-separated vertex identifiers")->required();
  verify->add_option("--strength", va.strength, "1 offensive, 2 strong offensive");
  verify->add_flag("--defensive", va.defensive, "Check the defensive condition instead");

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Find a minimum alliance within the size bound");
  auto* sg = solve->add_option("--graph", sa.graph, "Edge-list graph file");
  auto* si = solve->add_option("--instance", sa.instance, "Alliance instance JSON");
  sg->excludes(si);
  solve->add_option("--r", sa.r, "Size bound (default: all vertices)");
  solve->add_option("--strength", sa.strength, "1 offensive, 2 strong offensive");
  solve->add_option("--method", sa.method, "brute, branch or vc")->check(CLI::IsMember({"brute", "branch", "vc"}));

  ReduceArgs ra;
  auto* reduce = app.add_subcommand("reduce", "Build the target instance of a reduction");
  reduce->add_option("name", ra.name, "Reduction name")->required();
  reduce->add_option("--in", ra.in, "Source instance JSON")->required();
  reduce->add_option("--out", ra.out, "Target edge-list file")->required();
  reduce->add_option("--roles", ra.roles, "Role map JSON output");
  reduce->add_option("--provenance", ra.provenance, "Provenance JSON output");
  reduce->add_option("--instance-out", ra.instance_out, "Target alliance instance JSON output");

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "Run one harness tier on a source instance");
  check->add_option("tier", ca.tier, "lift, roundtrip or equiv")->required()->check(CLI::IsMember({"lift", "roundtrip", "equiv"}));
  check->add_option("--reduction", ca.reduction, "Reduction name")->required();
  check->add_option("--in", ca.in, "Source instance JSON (default: generated from --seed)");
  check->add_option("--witness", ca.witness, "Source witness JSON (default: source oracle)");
  check->add_flag("--branch-fallback", ca.branch_fallback, "Use the branching solver when enumeration is too large");
  check->add_option("--enumeration-limit", ca.enumeration_limit, "Largest subset count to enumerate");

  SuiteArgs su;
  auto* suite = app.add_subcommand("suite", "Run the generated checks for every reduction");
  suite->add_option("--reductions", su.reductions, "Subset of reductions")->delimiter(',');
  suite->add_option("--tiers", su.tiers, "Subset of tiers")->delimiter(',');
  suite->add_option("--cases", su.cases, "Seeds per reduction");
  suite->add_option("--pipeline-cases", su.pipeline_cases, "Seeds for mrss-oa");
  suite->add_option("--time-ceiling", su.ceiling, "Stop after this many seconds");
  suite->add_flag("--branch-fallback", su.branch_fallback, "Use the branching solver when enumeration is too large");

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Print a generated instance");
  gen->add_option("kind", ga.kind,
                  "graph, vc3, mrss, phs, strings, cycle-diagram, circle, grid, grid-subgraph, oaf or case")
      ->required();
  gen->add_option("--n", ga.n, "Vertices, vectors, string length or chords");
  gen->add_option("--k", ga.k, "Dimension, grid side or string count");
  gen->add_option("--p", ga.p, "Edge probability");
  gen->add_option("--sets", ga.sets, "Family size");
  gen->add_option("--d", ga.d, "Distance bound");
  gen->add_option("--width", ga.w, "Grid width");
  gen->add_option("--height", ga.h, "Grid height");
  gen->add_option("--max-entry", ga.max_entry, "Largest vector entry");
  gen->add_option("--pairs", ga.pairs, "Forbidden hub/pendant pairs");
  gen->add_option("--max-r", ga.max_r, "Largest accepted alliance size");
  gen->add_option("--reduction", ga.reduction, "Reduction for 'case'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }
  if (*seed_opt) g.seed = seed_value;

  try {
    if (*verify) return run_verify(va, g);
    if (*solve) {
      if (sa.graph.empty() && sa.instance.empty()) throw oa::PreconditionError("solve needs --graph or --instance");
      if (sa.method == "vc" && sa.graph.empty()) throw oa::PreconditionError("--method vc needs --graph");
      return run_solve(sa, g);
    }
    if (*reduce) return run_reduce(ra, g);
    if (*check) return run_check_verb(ca, g);
    if (*suite) return run_suite_verb(su, g);
    if (*gen) return run_gen(ga, g);
  } catch (const oa::GraphInputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const oa::PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kInputError;
  } catch (const oa::DeskScaleError& e) {
    std::cerr << "too large: " << e.what() << '\n';
    return kBudget;
  } catch (const oa::Json::exception& e) {
    std::cerr << "json: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  }
  return kFail;
}
