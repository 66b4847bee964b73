#include "common.hpp"
#include "oa/json_io.hpp"

namespace oa {

namespace {

void require_degree_3(const VcInstance& inst, const char* reduction) {
  if (inst.graph.order() == 0) throw PreconditionError(std::string(reduction) + " needs a non-empty graph");
  if (const auto deg = max_degree(inst.graph); deg > 3)
    throw PreconditionError(std::string(reduction) + " needs maximum degree 3, found " + std::to_string(deg));
}

VertexSet source_ids(const ReducedInstance& out, const VertexSet& cover, const char* block) {
  const VertexRange copy = out.roles[block];
  std::vector<Vertex> ids;
  for (Vertex v : cover) {
    if (v >= copy.count) throw PreconditionError("vertex " + std::to_string(v) + " is not in the source graph");
    ids.push_back(copy[v]);
  }
  return VertexSet(std::move(ids));
}

}  // namespace

ReducedInstance vc3_to_oa_bipartite(const VcInstance& inst, const ReductionOptions& opts) {
  require_degree_3(inst, "vc-bipartite");
  const std::size_t n = inst.graph.order();
  const auto edges = inst.graph.edges();
  const std::size_t budget = inst.k + 5;

  ReducedInstance out;
  RoleMap& roles = out.roles;
  const VertexRange v0 = roles.append("V_0", n);
  const VertexRange v1 = roles.append("V_1", n);
  const VertexRange e0 = roles.append("E_0", edges.size());
  const Vertex a = roles.append("a", 1).first, bb = roles.append("b", 1).first, c = roles.append("c", 1).first;
  const Vertex d = roles.append("d", 1).first, e = roles.append("e", 1).first;
  const char* hub_names[] = {"a", "b", "c", "d", "e"};
  const Vertex hubs[] = {a, bb, c, d, e};
  for (const char* h : hub_names) roles.append(std::string("V_") + h, 4 * budget);
  detail::check_order(roles.order(), opts, "vc-bipartite output");

  GraphBuilder b(roles.order());
  for (std::size_t j = 0; j < edges.size(); ++j) {
    b.add_edge(v0[edges[j].first], e0[j]);
    b.add_edge(v0[edges[j].second], e0[j]);
  }
  for (std::size_t i = 0; i < n; ++i) b.add_edge(v0[i], v1[i]);
  for (std::size_t h = 0; h < 5; ++h) detail::add_star(b, hubs[h], roles[std::string("V_") + hub_names[h]]);
  detail::add_star(b, a, e0);
  detail::add_star(b, e, e0);
  detail::add_star(b, bb, v1);
  detail::add_star(b, c, v1);
  for (Vertex x : {a, bb, c, e}) b.add_edge(d, x);

  out.instance.graph = b.build();
  out.instance.r = budget;
  out.instance.strength = 1;
  out.provenance.reduction = "vc-bipartite";
  out.provenance.source_digest = digest(to_json(inst));
  out.provenance.parameters.push_back(detail::record("vc-bipartite", "r", "k+5",
                                                     {{"k", static_cast<long long>(inst.k)}},
                                                     static_cast<long long>(budget)));

  // e sits with a, b, c, so its pendants V_e go on the other side.
  VertexSet left = set_union(set_union(v1.set(), e0.set()), VertexSet{d});
  for (const char* h : {"a", "b", "c", "e"}) left = set_union(left, roles[std::string("V_") + h].set());
  VertexSet right = set_union(VertexSet{a, bb, c, e}, set_union(roles["V_d"].set(), v0.set()));
  out.bipartition = Bipartition{std::move(left), std::move(right)};
  return out;
}

LiftReport lift_vc_bipartite(const ReducedInstance& out, const VertexSet& cover) {
  VertexSet lifted = source_ids(out, cover, "V_0");
  for (const char* h : {"a", "b", "c", "d", "e"}) lifted.insert(out.roles.vertex(h));
  return make_lift_report(out.instance, std::move(lifted));
}

VertexSet project_vc_bipartite(const ReducedInstance& out, const VertexSet& alliance) {
  const VertexRange v0 = out.roles["V_0"], e0 = out.roles["E_0"];
  const Graph& g = out.instance.graph;
  VertexSet cover;
  for (Vertex v : alliance) {
    if (v0.contains(v)) {
      cover.insert(v - v0.first);
    } else if (e0.contains(v)) {
      for (Vertex u : g.neighbors(v)) {
        if (v0.contains(u)) {
          cover.insert(u - v0.first);
          break;
        }
      }
    }
  }
  return cover;
}

ReducedInstance vc3_to_oa_split(const VcInstance& inst, const ReductionOptions& opts) {
  require_degree_3(inst, "vc-split");
  const std::size_t n = inst.graph.order();
  const auto edges = inst.graph.edges();
  const std::size_t m = edges.size();

  ReducedInstance out;
  RoleMap& roles = out.roles;
  const VertexRange v = roles.append("V", n);
  const VertexRange ve = roles.append("V_e", m);
  const VertexRange y = roles.append("Y", m + 1);
  const VertexRange x = roles.append("X", 4 * (n + m));
  detail::check_order(roles.order(), opts, "vc-split output");

  GraphBuilder b(roles.order());
  for (std::size_t j = 0; j < m; ++j) {
    b.add_edge(v[edges[j].first], ve[j]);
    b.add_edge(v[edges[j].second], ve[j]);
  }
  detail::add_clique(b, ve);
  detail::add_clique(b, y);
  detail::add_join(b, ve, y);
  detail::add_join(b, x, y);

  out.instance.graph = b.build();
  out.instance.r = inst.k + m + 1;
  out.instance.strength = 1;
  out.provenance.reduction = "vc-split";
  out.provenance.source_digest = digest(to_json(inst));
  out.provenance.parameters.push_back(detail::record(
      "vc-split", "r", "k+m+1", {{"k", static_cast<long long>(inst.k)}, {"m", static_cast<long long>(m)}},
      static_cast<long long>(out.instance.r)));
  out.split = SplitPartition{set_union(ve.set(), y.set()), set_union(v.set(), x.set())};
  return out;
}

LiftReport lift_vc_split(const ReducedInstance& out, const VertexSet& cover) {
  return make_lift_report(out.instance, set_union(source_ids(out, cover, "V"), out.roles["Y"].set()));
}

VertexSet project_vc_split(const ReducedInstance& out, const VertexSet& alliance) {
  const VertexRange v = out.roles["V"], ve = out.roles["V_e"];
  const Graph& g = out.instance.graph;
  VertexSet kept;
  for (Vertex u : alliance)
    if (v.contains(u)) kept.insert(u);
  for (Vertex e : alliance) {
    if (!ve.contains(e)) continue;
    Vertex lowest = 0;
    bool present = false, found = false;
    for (Vertex u : g.neighbors(e)) {
      if (!v.contains(u)) continue;
      if (!found) lowest = u;
      found = true;
      present = present || kept.contains(u);
    }
    if (found && !present) kept.insert(lowest);
  }
  VertexSet cover;
  for (Vertex u : kept) cover.insert(u - v.first);
  return cover;
}

}  // namespace oa
