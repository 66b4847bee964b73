#include "common.hpp"
#include "oa/json_io.hpp"

namespace oa {

namespace {

std::string clique_name(Vertex v, int occurrence) {
  return "C" + std::to_string(occurrence + 1) + "_v" + std::to_string(v + 1);
}

}  // namespace

ReducedInstance circle_ds_to_oa(const CircleDsInstance& inst, const ReductionOptions& opts) {
  inst.validate();
  const ChordDiagram& cd = inst.diagram;
  const Graph g = chord_diagram_to_graph(cd);
  const std::size_t n = g.order(), m = g.size();
  const std::size_t r = 2 * m + inst.k;
  const std::size_t fan = 2 * r;

  ReducedInstance out;
  RoleMap& roles = out.roles;
  roles.append("V", n);
  for (Vertex v = 0; v < n; ++v) {
    roles.append(clique_name(v, 0), g.degree(v) / 2);
    roles.append(clique_name(v, 1), (g.degree(v) + 1) / 2);
  }
  for (Vertex v = 0; v < n; ++v)
    for (int o = 0; o < 2; ++o) roles.append("V_square_" + clique_name(v, o), roles[clique_name(v, o)].count * fan);
  detail::check_order(roles.order(), opts, "ds-circle output");

  auto clique_at = [&](std::size_t pos) {
    const Vertex v = cd.endpoints()[pos];
    return roles[clique_name(v, cd.positions(v).first == pos ? 0 : 1)];
  };
  auto pendants_of = [&](Vertex x) {
    const auto& block = roles.block_of(x);
    const VertexRange all = roles["V_square_" + block.name];
    return VertexRange{all[(x - block.first) * fan], fan};
  };

  GraphBuilder b(roles.order());
  b.add_graph(g);
  for (Vertex v = 0; v < n; ++v) {
    for (int o = 0; o < 2; ++o) {
      const VertexRange c = roles[clique_name(v, o)];
      detail::add_star(b, v, c);
      detail::add_clique(b, c);
      for (std::size_t i = 0; i < c.count; ++i) detail::add_star(b, c[i], pendants_of(c[i]));
    }
  }

  // Each endpoint of chord v becomes "C v C" for the clique of that occurrence.
  const std::size_t len = cd.endpoints().size();
  std::vector<std::vector<Vertex>> blocks(len);
  for (std::size_t p = 0; p < len; ++p) {
    const VertexRange c = clique_at(p);
    for (std::size_t i = 0; i < c.count; ++i) blocks[p].push_back(c[i]);
    blocks[p].push_back(cd.endpoints()[p]);
    for (std::size_t i = 0; i < c.count; ++i) blocks[p].push_back(c[i]);
  }
  // Neighboring blocks trade their touching symbols, so those two chords cross.
  for (std::size_t p = 0; p + 1 < len; ++p) {
    b.add_edge(clique_at(p).back(), clique_at(p + 1)[0]);
    std::swap(blocks[p].back(), blocks[p + 1].front());
  }

  std::vector<Vertex> sequence;
  std::vector<std::uint8_t> seen(roles.order(), 0);
  for (const auto& block : blocks) {
    for (Vertex s : block) {
      if (s < n || seen[s]++) {
        sequence.push_back(s);
        continue;
      }
      const VertexRange ps = pendants_of(s);
      for (std::size_t t = 0; t < ps.count; ++t) sequence.push_back(ps[t]);
      sequence.push_back(s);
      for (std::size_t t = ps.count; t-- > 0;) sequence.push_back(ps[t]);
    }
  }

  out.instance.graph = b.build();
  out.instance.r = r;
  out.instance.strength = 1;
  out.diagram = ChordDiagram(std::move(sequence));
  out.source_order = n;
  out.provenance.reduction = "ds-circle";
  out.provenance.source_digest = digest(to_json(inst));
  out.provenance.parameters.push_back(detail::record(
      "ds-circle", "r", "2m+k", {{"m", static_cast<long long>(m)}, {"k", static_cast<long long>(inst.k)}},
      static_cast<long long>(r)));
  return out;
}

LiftReport lift_circle(const ReducedInstance& out, const VertexSet& dominating) {
  const VertexRange v = out.roles["V"];
  for (Vertex u : dominating)
    if (!v.contains(u)) throw PreconditionError("vertex " + std::to_string(u) + " is not in the source graph");
  std::vector<Vertex> lifted(dominating.begin(), dominating.end());
  for (Vertex c = 0; c < v.count; ++c)
    for (int o = 0; o < 2; ++o) {
      const VertexRange block = out.roles[clique_name(c, o)];
      for (std::size_t i = 0; i < block.count; ++i) lifted.push_back(block[i]);
    }
  return make_lift_report(out.instance, VertexSet(std::move(lifted)));
}

VertexSet project_circle(const ReducedInstance& out, const VertexSet& alliance) {
  return project_to_source(out, alliance);
}

}  // namespace oa
