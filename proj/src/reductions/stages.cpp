#include <algorithm>
#include <numeric>
#include <limits>

#include "common.hpp"

namespace oa {

namespace {

std::vector<Vertex> pendant_forbidden(const AllianceInstance& inst) {
  std::vector<Vertex> out;
  for (Vertex v : inst.forbidden)
    if (inst.graph.degree(v) == 1) out.push_back(v);
  return out;
}

void append_range(std::vector<Vertex>& to, VertexRange r) {
  for (std::size_t i = 0; i < r.count; ++i) to.push_back(r[i]);
}

long long as_ll(std::size_t x) { return static_cast<long long>(x); }

}  // namespace

ReducedInstance collapse_necessary(const ReducedInstance& in) {
  const AllianceInstance& src = in.instance;
  src.validate();
  const std::size_t old_necessary = src.necessary.size();
  if (old_necessary == 0) throw PreconditionError("collapse needs at least one necessary vertex");

  ReducedInstance out = detail::extend(in, "collapse");
  const Vertex x = out.roles.append("collapse.x", 1).first;
  const Vertex y = out.roles.append("collapse.y", 1).first;
  const VertexRange pendants = out.roles.append("collapse.V_square_x", old_necessary - 1);

  GraphBuilder b(out.roles.order());
  b.add_graph(src.graph);
  b.add_edge(x, y);
  for (Vertex v : src.necessary) b.add_edge(x, v);
  detail::add_star(b, x, pendants);

  out.instance.graph = b.build();
  out.instance.strength = src.strength;
  std::vector<Vertex> forbidden = src.forbidden.items();
  forbidden.push_back(x);
  append_range(forbidden, pendants);
  out.instance.forbidden = VertexSet(std::move(forbidden));
  out.instance.necessary = VertexSet{y};
  out.instance.r = src.r + 1;
  out.modulator.insert(x);
  out.provenance.source_digest = detail::stage_digest(in);
  out.provenance.parameters.push_back(
      detail::record("collapse", "r", "r+1", {{"r", as_ll(src.r)}}, as_ll(out.instance.r)));
  return out;
}

LiftReport lift_collapse(const ReducedInstance& out, const VertexSet& solution) {
  VertexSet lifted = solution;
  lifted.insert(out.roles.vertex("collapse.y"));
  return make_lift_report(out.instance, std::move(lifted));
}

ReducedInstance soafn_to_oaf(const ReducedInstance& in) {
  const AllianceInstance& src = in.instance;
  src.validate();
  if (src.strength != 2) throw PreconditionError("soafn-oaf needs strength 2, got " + std::to_string(src.strength));
  if (src.necessary.size() != 1)
    throw PreconditionError("soafn-oaf needs exactly one necessary vertex, got " +
                            std::to_string(src.necessary.size()));
  const std::size_t n = src.graph.order();
  const Vertex x = src.necessary.front();

  ReducedInstance out = detail::extend(in, "soafn-oaf");
  const VertexRange bridge = out.roles.append("oaf.T", 4 * n);
  const VertexRange t_pendants = out.roles.append("oaf.V_square_t", 4 * n);
  const VertexRange x_pendants = out.roles.append("oaf.V_square_x", n);
  const Vertex t_hub = out.roles.append("oaf.t_square", 1).first;
  const Vertex x_hub = out.roles.append("oaf.x_square", 1).first;

  GraphBuilder b(out.roles.order());
  b.add_graph(src.graph);
  detail::add_star(b, t_hub, bridge);
  detail::add_star(b, t_hub, t_pendants);
  b.add_edge(t_hub, x);
  detail::add_star(b, x_hub, bridge);
  detail::add_star(b, x_hub, x_pendants);
  const VertexSet pendant_f(pendant_forbidden(src));
  for (Vertex v = 0; v < n; ++v)
    if (!pendant_f.contains(v)) b.add_edge(x_hub, v);

  out.instance.graph = b.build();
  out.instance.strength = 1;
  std::vector<Vertex> forbidden = src.forbidden.items();
  append_range(forbidden, t_pendants);
  append_range(forbidden, x_pendants);
  forbidden.push_back(t_hub);
  forbidden.push_back(x_hub);
  out.instance.forbidden = VertexSet(std::move(forbidden));
  out.instance.r = src.r + 4 * n;
  out.modulator.insert(t_hub);
  out.modulator.insert(x_hub);
  out.provenance.source_digest = detail::stage_digest(in);
  out.provenance.parameters.push_back(
      detail::record("soafn-oaf", "r", "r+4n", {{"r", as_ll(src.r)}, {"n", as_ll(n)}}, as_ll(out.instance.r)));
  return out;
}

LiftReport lift_soafn_oaf(const ReducedInstance& out, const VertexSet& solution) {
  return make_lift_report(out.instance, set_union(solution, out.roles["oaf.T"].set()));
}

std::size_t oaf_to_oa_order(const ReducedInstance& in) {
  const std::size_t r = in.instance.r;
  return in.instance.graph.order() + pendant_forbidden(in.instance).size() * (4 * r + 16 * r * r);
}

ReducedInstance oaf_to_oa(const ReducedInstance& in, const ReductionOptions& opts) {
  const AllianceInstance& src = in.instance;
  src.validate();
  if (src.strength != 1) throw PreconditionError("oaf-oa needs strength 1, got " + std::to_string(src.strength));
  if (!src.necessary.empty()) throw PreconditionError("oaf-oa does not accept necessary vertices");
  if (auto report = validate_forbidden_structure(src.graph, src.forbidden); !report.valid()) {
    std::string detail = report.constraint_failures.empty() ? "" : report.constraint_failures.front().detail;
    throw PreconditionError("forbidden structure is invalid: " + detail);
  }
  const std::size_t r = src.r, n = src.graph.order();
  const std::size_t total = oaf_to_oa_order(in);
  detail::check_order(total, opts, "oaf-oa output");
  if (2 * (src.graph.size() + (total - n)) > std::numeric_limits<std::uint32_t>::max())
    throw DeskScaleError("oaf-oa output has too many edges for 32-bit offsets");

  ReducedInstance out = detail::extend(in, "oaf-oa");
  const std::vector<Vertex> roots = pendant_forbidden(src);
  const std::size_t fan = 4 * r;
  std::vector<VertexRange> children, leaves;
  for (Vertex u : roots) {
    const std::string tag = "T_u" + std::to_string(u);
    children.push_back(out.roles.append(tag + ".children", fan));
    leaves.push_back(out.roles.append(tag + ".leaves", fan * fan));
  }

  // Written straight into CSR: the output can exceed 10^8 vertices.
  std::vector<std::uint32_t> offsets(total + 1, 0);
  for (Vertex v = 0; v < n; ++v) offsets[v + 1] = static_cast<std::uint32_t>(src.graph.degree(v));
  for (std::size_t t = 0; t < roots.size(); ++t) {
    offsets[roots[t] + 1] += static_cast<std::uint32_t>(fan);
    for (std::size_t c = 0; c < fan; ++c) offsets[children[t][c] + 1] = static_cast<std::uint32_t>(1 + fan);
    for (std::size_t l = 0; l < fan * fan; ++l) offsets[leaves[t][l] + 1] = 1;
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());

  std::vector<Vertex> adjacency(offsets.back());
  std::size_t root_index = 0;
  for (Vertex v = 0; v < n; ++v) {
    auto nb = src.graph.neighbors(v);
    auto pos = std::copy(nb.begin(), nb.end(), adjacency.begin() + offsets[v]);
    if (root_index < roots.size() && roots[root_index] == v) {
      const VertexRange kids = children[root_index++];
      for (std::size_t c = 0; c < fan; ++c) *pos++ = kids[c];
    }
  }
  for (std::size_t t = 0; t < roots.size(); ++t) {
    for (std::size_t c = 0; c < fan; ++c) {
      auto pos = adjacency.begin() + offsets[children[t][c]];
      *pos++ = roots[t];
      for (std::size_t l = 0; l < fan; ++l) *pos++ = leaves[t][c * fan + l];
      for (std::size_t l = 0; l < fan; ++l) adjacency[offsets[leaves[t][c * fan + l]]] = children[t][c];
    }
  }

  out.instance.graph = Graph::from_csr(std::move(offsets), std::move(adjacency));
  out.instance.strength = 1;
  out.instance.r = r;
  out.provenance.source_digest = detail::stage_digest(in);
  out.provenance.parameters.push_back(detail::record("oaf-oa", "r", "r", {{"r", as_ll(r)}}, as_ll(r)));
  return out;
}

LiftReport lift_oaf_oa(const ReducedInstance& out, const VertexSet& solution) {
  return make_lift_report(out.instance, solution);
}

}  // namespace oa
