#include "common.hpp"
#include "oa/json_io.hpp"

namespace oa {

ReducedInstance pds_to_soa_apex(const DsInstance& inst, const ReductionOptions& opts) {
  const Graph& g = inst.graph;
  if (g.order() == 0) throw PreconditionError("pds-apex needs a non-empty graph");
  if (!is_connected(g)) throw PreconditionError("pds-apex needs a connected source graph");
  const std::size_t n = g.order();
  const auto edges = g.edges();
  const std::size_t m = edges.size();

  ReducedInstance out;
  RoleMap& roles = out.roles;
  const VertexRange v = roles.append("V", n);
  const VertexRange subdiv = roles.append("v_e", m);
  const VertexRange hats = roles.append("h_e", 3 * m);
  const Vertex x = roles.append("x", 1).first;
  const Vertex x_prime = roles.append("x_prime", 1).first;
  const VertexRange shared = roles.append("V_square_x", 6 * n);
  detail::check_order(roles.order(), opts, "pds-apex output");

  GraphBuilder b(roles.order());
  b.add_graph(g);
  for (std::size_t j = 0; j < m; ++j) {
    b.add_edge(subdiv[j], v[edges[j].first]);
    b.add_edge(subdiv[j], v[edges[j].second]);
    for (std::size_t t = 0; t < 3; ++t) {
      b.add_edge(subdiv[j], hats[3 * j + t]);
      b.add_edge(x, hats[3 * j + t]);
    }
    b.add_edge(x, subdiv[j]);
  }
  detail::add_star(b, x, shared);
  detail::add_star(b, x_prime, shared);

  out.instance.graph = b.build();
  out.instance.r = m + inst.k + 2;
  out.instance.strength = 2;
  out.modulator = VertexSet{x};
  out.provenance.reduction = "pds-apex";
  out.provenance.source_digest = digest(to_json(inst));
  out.provenance.parameters.push_back(detail::record(
      "pds-apex", "r", "m+k+2", {{"m", static_cast<long long>(m)}, {"k", static_cast<long long>(inst.k)}},
      static_cast<long long>(out.instance.r)));
  return out;
}

LiftReport lift_apex(const ReducedInstance& out, const VertexSet& dominating) {
  const VertexRange v = out.roles["V"];
  for (Vertex u : dominating)
    if (!v.contains(u)) throw PreconditionError("vertex " + std::to_string(u) + " is not in the source graph");
  VertexSet lifted = set_union(dominating, out.roles["v_e"].set());
  lifted.insert(out.roles.vertex("x"));
  lifted.insert(out.roles.vertex("x_prime"));
  return make_lift_report(out.instance, std::move(lifted));
}

VertexSet project_apex(const ReducedInstance& out, const VertexSet& alliance) {
  const VertexRange v = out.roles["V"], subdiv = out.roles["v_e"];
  const Graph& g = out.instance.graph;
  VertexSet dominating;
  for (Vertex u : alliance)
    if (v.contains(u)) dominating.insert(u);
  for (std::size_t j = 0; j < subdiv.count; ++j) {
    if (alliance.contains(subdiv[j])) continue;
    for (Vertex u : g.neighbors(subdiv[j]))
      if (v.contains(u)) dominating.insert(u);
  }
  return dominating;
}

bool apex_edge_bound_holds(const ReducedInstance& out) {
  const Graph& g = out.instance.graph;
  const Vertex x = out.roles.vertex("x");
  const std::size_t vertices = g.order() - 1;
  const std::size_t edges = g.size() - g.degree(x);
  return vertices < 3 ? edges <= vertices * (vertices - 1) / 2 : edges <= 3 * vertices - 6;
}

}  // namespace oa
