#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "oa/graph.hpp"

namespace oa {

/// Alliance search instance: size bound r, strength ℓ (1 = offensive,
/// 2 = strong offensive), forbidden vertices kept out of the solution,
/// necessary vertices forced in, and whether |S| must equal r exactly.
struct AllianceInstance {
  Graph graph;
  std::size_t r = 0;
  int strength = 1;
  VertexSet forbidden;
  VertexSet necessary;
  bool exact = false;

  /// Throws PreconditionError if forbidden/necessary overlap or leave V(graph).
  void validate() const;
};

struct DegreeViolation {
  Vertex vertex;
  std::size_t inside;   // d_S(v)
  std::size_t outside;  // d_{S^c}(v)
  int slack;            // required: inside >= outside + slack

  bool operator==(const DegreeViolation&) const = default;
};

enum class ConstraintKind { empty_set, size, forbidden, necessary, exactness, forbidden_structure, out_of_range };

std::string_view to_string(ConstraintKind kind);

struct ConstraintFailure {
  ConstraintKind kind;
  std::string detail;
  std::vector<Vertex> vertices;
};

/// Empty report <=> the checked set is a valid solution.
struct ViolationReport {
  std::vector<DegreeViolation> violations;
  std::vector<ConstraintFailure> constraint_failures;

  bool valid() const noexcept { return violations.empty() && constraint_failures.empty(); }
  bool has(ConstraintKind kind) const;
  void merge(ViolationReport other);
};

/// N(S): vertices outside S with at least one neighbor in S.
VertexSet boundary(const Graph& g, const VertexSet& s);

/// Reports every v in N(S) with d_S(v) < d_{S^c}(v) + strength.
/// An empty S is reported as an `empty_set` failure.
ViolationReport check_offensive(const Graph& g, const VertexSet& s, int strength);

/// Reports every v in S with d_S(v) + 1 < d_{S^c}(v).
ViolationReport check_defensive(const Graph& g, const VertexSet& s);

/// Offensive check at the instance strength plus the size, exactness,
/// forbidden and necessary constraints.
ViolationReport check_instance_solution(const AllianceInstance& inst, const VertexSet& s);

/// Every degree-1 forbidden vertex has a forbidden neighbor, and every
/// forbidden vertex of larger degree has a degree-1 forbidden neighbor.
ViolationReport validate_forbidden_structure(const Graph& g, const VertexSet& forbidden);

}  // namespace oa
