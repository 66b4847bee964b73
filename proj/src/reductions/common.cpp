#include "common.hpp"

#include "oa/json_io.hpp"

namespace oa {

long long ParameterRecord::input(const std::string& key) const {
  for (const auto& [name, value] : inputs)
    if (name == key) return value;
  throw PreconditionError("parameter record " + reduction + "/" + name + " has no input '" + key + "'");
}

long long reevaluate(const ParameterRecord& p) {
  const std::string& red = p.reduction;
  auto in = [&](const char* key) { return p.input(key); };
  if (p.name == "r") {
    if (red == "mrss-soafn")
      return 2 * in("sum_i(colsum_i-t_i+1)") + 2 * in("sum_s(max_s+1)") + 5 * in("n") + 3 + in("kprime");
    if (red == "collapse") return in("r") + 1;
    if (red == "soafn-oaf") return in("r") + 4 * in("n");
    if (red == "oaf-oa") return in("r");
    if (red == "phs-oa") return 5 * in("k");
    if (red == "cs-oa") return 4 * in("n") + 2 * in("d") + 1;
    if (red == "vc-bipartite") return in("k") + 5;
    if (red == "vc-split") return in("k") + in("m") + 1;
    if (red == "pds-apex") return in("m") + in("k") + 2;
    if (red == "ds-circle") return 2 * in("m") + in("k");
  }
  if (p.name == "cover" && red == "cs-oa") return 18 * in("n") + 2 * in("d") + 2;
  throw PreconditionError("no formula registered for " + red + "/" + p.name);
}

ReducedInstance as_reduced(AllianceInstance inst, VertexSet modulator) {
  inst.validate();
  ReducedInstance out;
  out.roles.append("V", inst.graph.order());
  out.source_order = inst.graph.order();
  out.modulator = std::move(modulator);
  out.provenance.reduction = "input";
  out.provenance.source_digest = digest(to_json(inst));
  out.instance = std::move(inst);
  return out;
}

LiftReport make_lift_report(const AllianceInstance& inst, VertexSet lifted) {
  LiftReport report;
  report.verification = check_instance_solution(inst, lifted);
  report.bound = inst.r;
  report.lifted = std::move(lifted);
  return report;
}

VertexSet project_to_source(const ReducedInstance& out, const VertexSet& alliance) {
  std::vector<Vertex> kept;
  for (Vertex v : alliance)
    if (v < out.source_order) kept.push_back(v);
  return VertexSet(std::move(kept));
}

namespace detail {

std::string stage_digest(const ReducedInstance& in) { return digest(to_json(in.instance)); }

}  // namespace detail
}  // namespace oa
