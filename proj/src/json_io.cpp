#include "oa/json_io.hpp"

#include <cstdio>
#include <sstream>

#include "oa/errors.hpp"

namespace oa {

namespace {

Json edges_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return edges;
}

Graph graph_from(const Json& j) {
  const auto n = j.at("n").get<std::size_t>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw GraphInputError("edge " + std::to_string(edges.size()) + " is not a pair", edges.size());
    edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  return graph_from_edge_list(n, edges).graph;
}

void expect_kind(const Json& j, const char* kind) {
  if (j.contains("kind") && j.at("kind").get<std::string>() != kind)
    throw PreconditionError("expected an instance of kind '" + std::string(kind) + "', got '" +
                            j.at("kind").get<std::string>() + "'");
}

}  // namespace

Json to_json(const VertexSet& s) { return Json(s.items()); }

VertexSet vertex_set_from_json(const Json& j) { return VertexSet(j.get<std::vector<Vertex>>()); }

Json to_json(const MrssInstance& inst) {
  return Json{{"kind", "mrss"}, {"k", inst.k}, {"kprime", inst.kprime}, {"vectors", inst.vectors}, {"target", inst.target}};
}

MrssInstance mrss_from_json(const Json& j) {
  expect_kind(j, "mrss");
  MrssInstance inst;
  inst.k = j.at("k").get<std::size_t>();
  inst.kprime = j.at("kprime").get<std::size_t>();
  inst.vectors = j.at("vectors").get<std::vector<IntVector>>();
  inst.target = j.at("target").get<IntVector>();
  inst.validate();
  return inst;
}

Json to_json(const PhsInstance& inst) {
  Json family = Json::array();
  for (const auto& set : inst.family) {
    Json cells = Json::array();
    for (const Cell& c : set) cells.push_back({c.row, c.col});
    family.push_back(cells);
  }
  return Json{{"kind", "phs"}, {"k", inst.k}, {"family", family}};
}

PhsInstance phs_from_json(const Json& j) {
  expect_kind(j, "phs");
  PhsInstance inst;
  inst.k = j.at("k").get<std::size_t>();
  for (const auto& set : j.at("family")) {
    std::vector<Cell> cells;
    for (const auto& c : set) cells.push_back({c.at(0).get<std::uint32_t>(), c.at(1).get<std::uint32_t>()});
    inst.family.push_back(std::move(cells));
  }
  inst.validate();
  return inst;
}

Json to_json(const ClosestStringInstance& inst) {
  return Json{{"kind", "closest_string"},
              {"strings", inst.strings},
              {"d", inst.d},
              {"alphabet", std::string{inst.alphabet[0], inst.alphabet[1]}}};
}

ClosestStringInstance closest_string_from_json(const Json& j) {
  expect_kind(j, "closest_string");
  ClosestStringInstance inst;
  inst.strings = j.at("strings").get<std::vector<std::string>>();
  inst.d = j.at("d").get<std::size_t>();
  if (j.contains("alphabet")) {
    auto a = j.at("alphabet").get<std::string>();
    if (a.size() != 2) throw PreconditionError("alphabet must have exactly two letters");
    inst.alphabet = {a[0], a[1]};
  }
  inst.validate();
  return inst;
}

Json to_json(const VcInstance& inst) {
  return Json{{"kind", "vc"}, {"n", inst.graph.order()}, {"edges", edges_json(inst.graph)}, {"k", inst.k},
              {"max_degree_3", inst.max_degree_3}};
}

VcInstance vc_from_json(const Json& j) {
  expect_kind(j, "vc");
  VcInstance inst;
  inst.graph = graph_from(j);
  inst.k = j.at("k").get<std::size_t>();
  inst.max_degree_3 = j.value("max_degree_3", false);
  inst.validate();
  return inst;
}

Json to_json(const DsInstance& inst) {
  return Json{{"kind", "ds"}, {"n", inst.graph.order()}, {"edges", edges_json(inst.graph)}, {"k", inst.k}};
}

DsInstance ds_from_json(const Json& j) {
  expect_kind(j, "ds");
  return DsInstance{graph_from(j), j.at("k").get<std::size_t>()};
}

Json to_json(const CircleDsInstance& inst) {
  return Json{{"kind", "circle_ds"}, {"diagram", inst.diagram.endpoints()}, {"k", inst.k}};
}

CircleDsInstance circle_ds_from_json(const Json& j) {
  expect_kind(j, "circle_ds");
  CircleDsInstance inst{ChordDiagram(j.at("diagram").get<std::vector<Vertex>>()), j.at("k").get<std::size_t>()};
  inst.validate();
  return inst;
}

Json to_json(const AllianceInstance& inst) {
  return Json{{"kind", "alliance"},
              {"n", inst.graph.order()},
              {"edges", edges_json(inst.graph)},
              {"r", inst.r},
              {"strength", inst.strength},
              {"forbidden", to_json(inst.forbidden)},
              {"necessary", to_json(inst.necessary)},
              {"exact", inst.exact}};
}

AllianceInstance alliance_from_json(const Json& j) {
  expect_kind(j, "alliance");
  AllianceInstance inst;
  inst.graph = graph_from(j);
  inst.r = j.at("r").get<std::size_t>();
  inst.strength = j.value("strength", 1);
  if (j.contains("forbidden")) inst.forbidden = vertex_set_from_json(j.at("forbidden"));
  if (j.contains("necessary")) inst.necessary = vertex_set_from_json(j.at("necessary"));
  inst.exact = j.value("exact", false);
  inst.validate();
  return inst;
}

Json to_json(const ViolationReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"vertex", v.vertex}, {"inside", v.inside}, {"outside", v.outside}, {"slack", v.slack}});
  Json failures = Json::array();
  for (const auto& f : report.constraint_failures)
    failures.push_back({{"kind", std::string(to_string(f.kind))}, {"detail", f.detail}, {"vertices", f.vertices}});
  return Json{{"valid", report.valid()}, {"violations", violations}, {"constraint_failures", failures}};
}

Json to_json(const RoleMap& roles) {
  Json out = Json::object();
  for (const auto& b : roles.blocks())
    for (std::size_t i = 0; i < b.count; ++i) {
      Vertex v = b.first + static_cast<Vertex>(i);
      out[std::to_string(v)] = b.count == 1 ? b.name : b.name + "[" + std::to_string(i + 1) + "]";
    }
  return out;
}

std::string digest(const Json& j) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

VertexSet parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw GraphInputError("not a vertex identifier: '" + item + "'");
    out.push_back(static_cast<Vertex>(value));
  }
  return VertexSet(std::move(out));
}

std::string format_vertex_list(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace oa
