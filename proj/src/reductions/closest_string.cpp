#include "common.hpp"
#include "oa/json_io.hpp"

namespace oa {

namespace {

std::string cell_name(std::size_t pos, std::size_t letter) {
  return "w(" + std::to_string(pos + 1) + "," + std::to_string(letter + 1) + ")";
}

}  // namespace

ReducedInstance closest_string_to_oa(const ClosestStringInstance& inst, const ReductionOptions& opts) {
  inst.validate();
  const std::size_t n = inst.length(), d = inst.d;
  if (inst.strings.empty() || n == 0) throw PreconditionError("cs-oa needs at least one non-empty string");

  ReducedInstance out;
  RoleMap& roles = out.roles;
  const VertexRange strings = roles.append("v_x", inst.strings.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < 2; ++j) roles.append(cell_name(i, j), 1);
  const std::size_t clique = 3 * n + 2 * d + 1;
  const VertexRange d_tri = roles.append("D_triangle", clique);
  const VertexRange d_pendants = roles.append("V_d", clique * 12 * n);
  const VertexRange d_sq = roles.append("D_square", 12 * n + 1);
  const VertexRange rows = roles.append("r", n);
  detail::check_order(roles.order(), opts, "cs-oa output");
  auto w = [&](std::size_t i, std::size_t j) { return roles.vertex(cell_name(i, j)); };

  GraphBuilder b(roles.order());
  detail::Chooser chooser(opts);
  detail::add_clique(b, d_tri);
  for (std::size_t t = 0; t < clique; ++t) detail::add_star(b, d_tri[t], VertexRange{d_pendants[t * 12 * n], 12 * n});
  detail::add_clique(b, d_sq);
  for (std::size_t s = 0; s < inst.strings.size(); ++s) {
    for (std::size_t i = 0; i < n; ++i) b.add_edge(strings[s], w(i, inst.letter_index(inst.strings[s][i])));
    detail::add_star(b, strings[s], d_tri);
    for (Vertex v : chooser.pick(d_sq, 4 * n)) b.add_edge(strings[s], v);
  }
  for (std::size_t i = 0; i < n; ++i) {
    b.add_edge(rows[i], w(i, 0));
    b.add_edge(rows[i], w(i, 1));
    for (Vertex v : chooser.pick(d_tri, 3)) b.add_edge(rows[i], v);
    for (Vertex v : chooser.pick(d_sq, 2)) b.add_edge(rows[i], v);
  }

  out.instance.graph = b.build();
  out.instance.r = 4 * n + 2 * d + 1;
  out.instance.strength = 1;
  out.provenance.reduction = "cs-oa";
  out.provenance.source_digest = digest(to_json(inst));
  const std::vector<std::pair<std::string, long long>> inputs{{"n", static_cast<long long>(n)},
                                                              {"d", static_cast<long long>(d)}};
  out.provenance.parameters.push_back(
      detail::record("cs-oa", "r", "4n+2d+1", inputs, static_cast<long long>(out.instance.r)));

  VertexSet cover = set_union(rows.set(), set_union(d_sq.set(), d_tri.set()));
  for (std::size_t i = 0; i < n; ++i) {
    cover.insert(w(i, 0));
    cover.insert(w(i, 1));
  }
  out.provenance.parameters.push_back(
      detail::record("cs-oa", "cover", "18n+2d+2", inputs, static_cast<long long>(cover.size())));
  out.declared_cover = std::move(cover);
  return out;
}

LiftReport lift_closest_string(const ClosestStringInstance& inst, const ReducedInstance& out, const std::string& y) {
  if (y.size() != inst.length()) throw PreconditionError("candidate string has the wrong length");
  VertexSet lifted = out.roles["D_triangle"].set();
  for (std::size_t i = 0; i < y.size(); ++i) lifted.insert(out.roles.vertex(cell_name(i, inst.letter_index(y[i]))));
  return make_lift_report(out.instance, std::move(lifted));
}

std::string project_closest_string(const ClosestStringInstance& inst, const ReducedInstance& out,
                                   const VertexSet& alliance) {
  std::string y(inst.length(), inst.alphabet[0]);
  for (std::size_t i = 0; i < y.size(); ++i) {
    const bool first = alliance.contains(out.roles.vertex(cell_name(i, 0)));
    const bool second = alliance.contains(out.roles.vertex(cell_name(i, 1)));
    if (second && !first) y[i] = inst.alphabet[1];
  }
  return y;
}

}  // namespace oa
