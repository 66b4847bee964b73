#include "common.hpp"
#include "oa/json_io.hpp"

namespace oa {

namespace {

std::string cell_name(std::size_t row, std::size_t col) {
  return "w(" + std::to_string(row + 1) + "," + std::to_string(col + 1) + ")";
}

}  // namespace

ReducedInstance phs_to_oa(const PhsInstance& inst, const ReductionOptions& opts) {
  inst.validate();
  const std::size_t k = inst.k;
  if (k == 0) throw PreconditionError("phs-oa needs k >= 1");

  ReducedInstance out;
  RoleMap& roles = out.roles;
  const VertexRange sets = roles.append("v_F", inst.family.size());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) roles.append(cell_name(i, j), 1);
  const VertexRange d_tri = roles.append("D_triangle", 4 * k);
  const VertexRange d_pendants = roles.append("V_d", 4 * k * 10 * k);
  const VertexRange d_sq = roles.append("D_square", 12 * k + 1);
  const VertexRange rows = roles.append("r", k);
  const VertexRange cols = roles.append("c", k);
  detail::check_order(roles.order(), opts, "phs-oa output");
  auto w = [&](std::size_t i, std::size_t j) { return roles.vertex(cell_name(i, j)); };

  GraphBuilder b(roles.order());
  detail::Chooser chooser(opts);
  detail::add_clique(b, d_tri);
  for (std::size_t t = 0; t < d_tri.count; ++t)
    detail::add_star(b, d_tri[t], VertexRange{d_pendants[t * 10 * k], 10 * k});
  detail::add_clique(b, d_sq);
  for (std::size_t f = 0; f < inst.family.size(); ++f) {
    for (const Cell& c : inst.family[f]) b.add_edge(sets[f], w(c.row, c.col));
    detail::add_star(b, sets[f], d_tri);
    for (Vertex v : chooser.pick(d_sq, 4 * k - inst.family[f].size() + 1)) b.add_edge(sets[f], v);
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      b.add_edge(rows[i], w(i, j));
      b.add_edge(cols[i], w(j, i));
    }
  }
  for (VertexRange side : {rows, cols}) {
    for (std::size_t i = 0; i < k; ++i) {
      detail::add_star(b, side[i], d_tri);
      for (Vertex v : chooser.pick(d_sq, 3 * k + 1)) b.add_edge(side[i], v);
    }
  }

  out.instance.graph = b.build();
  out.instance.r = 5 * k;
  out.instance.strength = 1;
  out.provenance.reduction = "phs-oa";
  out.provenance.source_digest = digest(to_json(inst));
  out.provenance.parameters.push_back(detail::record("phs-oa", "r", "5k", {{"k", static_cast<long long>(k)}},
                                                     static_cast<long long>(out.instance.r)));
  return out;
}

LiftReport lift_phs(const ReducedInstance& out, const Permutation& p) {
  const std::size_t k = out.roles["r"].count;
  if (!is_permutation(p, k)) throw PreconditionError("not a permutation of 0.." + std::to_string(k - 1));
  VertexSet lifted = out.roles["D_triangle"].set();
  for (std::size_t i = 0; i < k; ++i) lifted.insert(out.roles.vertex(cell_name(i, p[i])));
  return make_lift_report(out.instance, std::move(lifted));
}

std::vector<Cell> project_phs(const ReducedInstance& out, const VertexSet& alliance) {
  const std::size_t k = out.roles["r"].count;
  std::vector<Cell> cells;
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j)
      if (alliance.contains(out.roles.vertex(cell_name(i, j)))) cells.push_back({i, j});
  return cells;
}

std::optional<Permutation> cells_to_permutation(const std::vector<Cell>& cells, std::size_t k) {
  if (cells.size() != k) return std::nullopt;
  Permutation p(k, 0);
  std::vector<std::uint8_t> row_seen(k, 0);
  for (const Cell& c : cells) {
    if (c.row >= k || row_seen[c.row]++) return std::nullopt;
    p[c.row] = c.col;
  }
  if (!is_permutation(p, k)) return std::nullopt;
  return p;
}

}  // namespace oa
