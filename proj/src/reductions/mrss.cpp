#include <algorithm>
#include <numeric>

#include "common.hpp"
#include "oa/json_io.hpp"

namespace oa {

namespace {

std::string vec_name(const char* prefix, std::size_t s) { return std::string(prefix) + std::to_string(s + 1); }

std::uint32_t max_entry(const IntVector& v) { return v.empty() ? 0 : *std::max_element(v.begin(), v.end()); }

}  // namespace

ReducedInstance mrss_to_soafn(const MrssInstance& inst, const ReductionOptions& opts) {
  inst.validate();
  const std::size_t k = inst.k, n = inst.vectors.size();

  std::vector<long long> colsum(k, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (max_entry(inst.vectors[s]) == 0)
      throw PreconditionError("vector " + std::to_string(s + 1) + " is all zero; its tree cannot be built");
    for (std::size_t i = 0; i < k; ++i) colsum[i] += inst.vectors[s][i];
  }
  for (std::size_t i = 0; i < k; ++i)
    if (2 * colsum[i] - 2 * static_cast<long long>(inst.target[i]) + 2 < 0)
      throw PreconditionError("dimension " + std::to_string(i + 1) + ": target " + std::to_string(inst.target[i]) +
                              " exceeds column sum " + std::to_string(colsum[i]) +
                              " by more than one, so the necessary pendant set would have negative size");

  ReducedInstance out;
  RoleMap& roles = out.roles;
  const VertexRange u = roles.append("U", k);
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t width = max_entry(inst.vectors[s]) + 1;
    roles.append(vec_name("A_s", s), width);
    roles.append(vec_name("B_s", s), width);
    roles.append(vec_name("A_square_s", s), width);
    roles.append(vec_name("B_square_s", s), width);
    roles.append(vec_name("C_s", s), 2 * width);
    roles.append(vec_name("Z_triangle_s", s), 5);
    roles.append(vec_name("z_square_s", s), 1);
    roles.append(vec_name("x_s", s), 1);
    roles.append(vec_name("y_s", s), 1);
    roles.append(vec_name("z_s", s), 1);
  }
  const Vertex a = roles.append("a", 1).first;
  const VertexRange a_tri = roles.append("A_triangle", 3);
  const Vertex a_sq = roles.append("a_square", 1).first;
  for (std::size_t i = 0; i < k; ++i) {
    roles.append(vec_name("V_square_u", i), static_cast<std::size_t>(colsum[i]));
    roles.append(vec_name("V_triangle_u", i),
                 static_cast<std::size_t>(2 * colsum[i] - 2 * static_cast<long long>(inst.target[i]) + 2));
  }
  detail::check_order(roles.order(), opts, "mrss-soafn output");

  GraphBuilder b(roles.order());
  detail::Chooser chooser(opts);
  std::vector<Vertex> forbidden(u.count), necessary;
  std::iota(forbidden.begin(), forbidden.end(), u.first);
  long long tree_budget = 0;

  for (std::size_t s = 0; s < n; ++s) {
    const auto as = roles[vec_name("A_s", s)], bs = roles[vec_name("B_s", s)];
    const auto asq = roles[vec_name("A_square_s", s)], bsq = roles[vec_name("B_square_s", s)];
    const auto cs = roles[vec_name("C_s", s)], ztri = roles[vec_name("Z_triangle_s", s)];
    const Vertex zsq = roles.vertex(vec_name("z_square_s", s)), x = roles.vertex(vec_name("x_s", s));
    const Vertex y = roles.vertex(vec_name("y_s", s)), z = roles.vertex(vec_name("z_s", s));
    for (std::size_t i = 0; i < as.count; ++i) {
      b.add_edge(asq[i], bsq[i]);
      b.add_edge(asq[i], as[i]);
      b.add_edge(asq[i], bs[i]);
      b.add_edge(x, asq[i]);
    }
    detail::add_star(b, z, ztri);
    b.add_edge(z, zsq);
    b.add_edge(x, z);
    b.add_edge(z, y);
    detail::add_star(b, y, cs);
    detail::add_star(b, a, as);
    detail::add_star(b, a, bs);
    detail::add_star(b, a, cs);
    for (std::size_t i = 0; i < k; ++i)
      for (Vertex v : chooser.pick(as, inst.vectors[s][i])) b.add_edge(u[i], v);

    for (auto r : {asq, bsq}) {
      auto items = r.set().items();
      forbidden.insert(forbidden.end(), items.begin(), items.end());
    }
    forbidden.push_back(zsq);
    forbidden.push_back(z);
    auto zt = ztri.set().items();
    necessary.insert(necessary.end(), zt.begin(), zt.end());
    tree_budget += static_cast<long long>(as.count + bs.count);
  }
  detail::add_star(b, a, a_tri);
  b.add_edge(a, a_sq);
  forbidden.push_back(a);
  forbidden.push_back(a_sq);
  for (std::size_t i = 0; i < 3; ++i) necessary.push_back(a_tri[i]);
  for (std::size_t i = 0; i < k; ++i) {
    const auto vsq = roles[vec_name("V_square_u", i)], vtri = roles[vec_name("V_triangle_u", i)];
    detail::add_star(b, u[i], vsq);
    detail::add_star(b, u[i], vtri);
    auto fs = vsq.set().items();
    forbidden.insert(forbidden.end(), fs.begin(), fs.end());
    auto ns = vtri.set().items();
    necessary.insert(necessary.end(), ns.begin(), ns.end());
  }

  out.instance.graph = b.build();
  out.instance.strength = 2;
  out.instance.forbidden = VertexSet(std::move(forbidden));
  out.instance.necessary = VertexSet(std::move(necessary));
  // Room for all necessary vertices, one of A_s u B_s or C_s per tree, and k' hubs x_s.
  out.instance.r = out.instance.necessary.size() + static_cast<std::size_t>(tree_budget) + inst.kprime;

  long long slack_sum = 0, width_sum = 0;
  for (std::size_t i = 0; i < k; ++i) slack_sum += colsum[i] - static_cast<long long>(inst.target[i]) + 1;
  for (const auto& v : inst.vectors) width_sum += max_entry(v) + 1;
  out.provenance.reduction = "mrss-soafn";
  out.provenance.source_digest = digest(to_json(inst));
  out.provenance.parameters.push_back(detail::record(
      "mrss-soafn", "r", "2*sum_i(colsum_i-t_i+1) + 2*sum_s(max_s+1) + 5n + 3 + k'",
      {{"sum_i(colsum_i-t_i+1)", slack_sum}, {"sum_s(max_s+1)", width_sum}, {"n", static_cast<long long>(n)},
       {"kprime", static_cast<long long>(inst.kprime)}},
      static_cast<long long>(out.instance.r)));

  std::vector<Vertex> mod(u.count);
  std::iota(mod.begin(), mod.end(), u.first);
  mod.push_back(a);
  out.modulator = VertexSet(std::move(mod));
  return out;
}

LiftReport lift_mrss(const MrssInstance& inst, const ReducedInstance& out, const std::vector<std::size_t>& chosen) {
  const std::size_t n = inst.vectors.size();
  std::vector<std::uint8_t> picked(n, 0);
  for (std::size_t s : chosen) {
    if (s >= n) throw PreconditionError("vector index " + std::to_string(s) + " out of range");
    if (picked[s]++) throw PreconditionError("vector index " + std::to_string(s) + " chosen twice");
  }
  std::vector<Vertex> lifted(out.instance.necessary.begin(), out.instance.necessary.end());
  auto take = [&](VertexRange r) {
    for (std::size_t i = 0; i < r.count; ++i) lifted.push_back(r[i]);
  };
  for (std::size_t s = 0; s < n; ++s) {
    if (picked[s]) {
      take(out.roles[vec_name("A_s", s)]);
      take(out.roles[vec_name("B_s", s)]);
      lifted.push_back(out.roles.vertex(vec_name("x_s", s)));
    } else {
      take(out.roles[vec_name("C_s", s)]);
    }
  }
  return make_lift_report(out.instance, VertexSet(std::move(lifted)));
}

std::vector<std::size_t> project_mrss(const ReducedInstance& out, const VertexSet& alliance) {
  std::vector<std::size_t> chosen;
  for (std::size_t s = 0; out.roles.has(vec_name("x_s", s)); ++s)
    if (alliance.contains(out.roles.vertex(vec_name("x_s", s)))) chosen.push_back(s);
  return chosen;
}

MrssPipeline mrss_to_oa_pipeline(const MrssInstance& inst, const ReductionOptions& opts) {
  MrssPipeline p;
  p.stages.push_back(mrss_to_soafn(inst, opts));
  p.stages.push_back(collapse_necessary(p.stages.back()));
  p.stages.push_back(soafn_to_oaf(p.stages.back()));
  p.stages.push_back(oaf_to_oa(p.stages.back(), opts));
  return p;
}

LiftReport lift_pipeline(const MrssInstance& inst, const MrssPipeline& p, const std::vector<std::size_t>& chosen) {
  if (p.stages.size() != 4) throw PreconditionError("pipeline must have four stages");
  VertexSet s = lift_mrss(inst, p.stages[0], chosen).lifted;
  s = lift_collapse(p.stages[1], s).lifted;
  s = lift_soafn_oaf(p.stages[2], s).lifted;
  return lift_oaf_oa(p.stages[3], s);
}

std::vector<std::size_t> project_pipeline(const MrssPipeline& p, const VertexSet& alliance) {
  if (p.stages.size() != 4) throw PreconditionError("pipeline must have four stages");
  VertexSet s = alliance;
  for (std::size_t stage = 3; stage >= 1; --stage) s = project_to_source(p.stages[stage], s);
  return project_mrss(p.stages[0], s);
}

}  // namespace oa
