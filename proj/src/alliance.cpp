#include "oa/alliance.hpp"

#include <algorithm>
#include <string>

#include "oa/errors.hpp"

namespace oa {

std::string_view to_string(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::empty_set: return "empty-set";
    case ConstraintKind::size: return "size";
    case ConstraintKind::forbidden: return "forbidden";
    case ConstraintKind::necessary: return "necessary";
    case ConstraintKind::exactness: return "exactness";
    case ConstraintKind::forbidden_structure: return "forbidden-structure";
    case ConstraintKind::out_of_range: return "out-of-range";
  }
  return "unknown";
}

void AllianceInstance::validate() const {
  const std::size_t n = graph.order();
  if ((!forbidden.empty() && forbidden.back() >= n) || (!necessary.empty() && necessary.back() >= n))
    throw PreconditionError("forbidden/necessary set contains a vertex outside the graph");
  if (!set_intersection(forbidden, necessary).empty())
    throw PreconditionError("forbidden and necessary sets intersect");
}

bool ViolationReport::has(ConstraintKind kind) const {
  return std::any_of(constraint_failures.begin(), constraint_failures.end(),
                     [&](const ConstraintFailure& f) { return f.kind == kind; });
}

void ViolationReport::merge(ViolationReport other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  std::sort(violations.begin(), violations.end(),
            [](const DegreeViolation& a, const DegreeViolation& b) { return a.vertex < b.vertex; });
  for (auto& f : other.constraint_failures) constraint_failures.push_back(std::move(f));
}

namespace {

std::vector<std::uint8_t> membership(const Graph& g, const VertexSet& s) {
  std::vector<std::uint8_t> in(g.order(), 0);
  for (Vertex v : s) in[v] = 1;
  return in;
}

bool out_of_range(const Graph& g, const VertexSet& s, ViolationReport& report) {
  std::vector<Vertex> bad;
  for (Vertex v : s)
    if (v >= g.order()) bad.push_back(v);
  if (bad.empty()) return false;
  report.constraint_failures.push_back(
      {ConstraintKind::out_of_range, "set contains vertices outside the graph", std::move(bad)});
  return true;
}

}  // namespace

VertexSet boundary(const Graph& g, const VertexSet& s) {
  auto in = membership(g, s);
  std::vector<Vertex> out;
  for (Vertex v : s)
    for (Vertex u : g.neighbors(v))
      if (!in[u]) {
        in[u] = 2;
        out.push_back(u);
      }
  return VertexSet(std::move(out));
}

ViolationReport check_offensive(const Graph& g, const VertexSet& s, int strength) {
  ViolationReport report;
  if (out_of_range(g, s, report)) return report;
  if (s.empty()) {
    report.constraint_failures.push_back({ConstraintKind::empty_set, "alliances are non-empty", {}});
    return report;
  }
  auto in = membership(g, s);
  // Collect N(S) with its d_S counts in one pass over the neighborhoods of S.
  std::vector<Vertex> touched;
  std::vector<std::uint32_t> inside(g.order(), 0);
  for (Vertex v : s)
    for (Vertex u : g.neighbors(v))
      if (!in[u] && inside[u]++ == 0) touched.push_back(u);
  std::sort(touched.begin(), touched.end());
  for (Vertex u : touched) {
    const long long d_in = inside[u];
    const long long d_out = static_cast<long long>(g.degree(u)) - d_in;
    if (d_in < d_out + strength)
      report.violations.push_back({u, static_cast<std::size_t>(d_in), static_cast<std::size_t>(d_out), strength});
  }
  return report;
}

ViolationReport check_defensive(const Graph& g, const VertexSet& s) {
  ViolationReport report;
  if (out_of_range(g, s, report)) return report;
  if (s.empty()) {
    report.constraint_failures.push_back({ConstraintKind::empty_set, "alliances are non-empty", {}});
    return report;
  }
  auto in = membership(g, s);
  for (Vertex v : s) {
    std::size_t d_in = 0;
    for (Vertex u : g.neighbors(v)) d_in += in[u];
    const std::size_t d_out = g.degree(v) - d_in;
    if (d_in + 1 < d_out) report.violations.push_back({v, d_in, d_out, -1});
  }
  return report;
}

ViolationReport check_instance_solution(const AllianceInstance& inst, const VertexSet& s) {
  ViolationReport report = check_offensive(inst.graph, s, inst.strength);
  if (report.has(ConstraintKind::out_of_range)) return report;

  if (inst.r == 0 || (!inst.exact && s.size() > inst.r))
    report.constraint_failures.push_back(
        {ConstraintKind::size,
         "|S| = " + std::to_string(s.size()) + " outside [1, " + std::to_string(inst.r) + "]",
         {}});
  else if (inst.exact && s.size() != inst.r)
    report.constraint_failures.push_back(
        {ConstraintKind::exactness,
         "|S| = " + std::to_string(s.size()) + " but exactly " + std::to_string(inst.r) + " required",
         {}});

  auto hit = set_intersection(s, inst.forbidden);
  if (!hit.empty())
    report.constraint_failures.push_back(
        {ConstraintKind::forbidden, "solution contains forbidden vertices", hit.items()});
  auto missing = set_difference(inst.necessary, s);
  if (!missing.empty())
    report.constraint_failures.push_back(
        {ConstraintKind::necessary, "solution misses necessary vertices", missing.items()});
  return report;
}

ViolationReport validate_forbidden_structure(const Graph& g, const VertexSet& forbidden) {
  ViolationReport report;
  if (out_of_range(g, forbidden, report)) return report;
  std::vector<Vertex> lonely_leaves, bare_hubs;
  for (Vertex v : forbidden) {
    auto nb = g.neighbors(v);
    if (g.degree(v) == 1) {
      if (!forbidden.contains(nb[0])) lonely_leaves.push_back(v);
    } else if (g.degree(v) > 1) {
      bool has_leaf = std::any_of(nb.begin(), nb.end(), [&](Vertex u) {
        return g.degree(u) == 1 && forbidden.contains(u);
      });
      if (!has_leaf) bare_hubs.push_back(v);
    }
  }
  if (!lonely_leaves.empty())
    report.constraint_failures.push_back({ConstraintKind::forbidden_structure,
                                          "degree-1 forbidden vertex without a forbidden neighbor",
                                          std::move(lonely_leaves)});
  if (!bare_hubs.empty())
    report.constraint_failures.push_back(
        {ConstraintKind::forbidden_structure,
         "forbidden vertex of degree > 1 without a degree-1 forbidden neighbor", std::move(bare_hubs)});
  return report;
}

}  // namespace oa
