#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oa/alliance.hpp"
#include "oa/chord_diagram.hpp"
#include "oa/roles.hpp"
#include "oa/sources.hpp"
#include "oa/structure.hpp"

namespace oa {

struct ReductionOptions {
  /// Unset: every free choice ("any k vertices of ...") takes the lowest
  /// identifiers. Set: choices are drawn from a generator seeded with it.
  std::optional<std::uint64_t> seed;
  /// Constructions refuse to build graphs larger than this (DeskScaleError).
  std::size_t max_vertices = 150'000'000;
};

/// A size parameter of a construction with the inputs it was computed from.
struct ParameterRecord {
  std::string reduction;
  std::string name;
  std::string formula;
  std::vector<std::pair<std::string, long long>> inputs;
  long long value = 0;

  long long input(const std::string& key) const;
};

/// Recomputes `p.value` from `p.inputs` with the formula registered for
/// (p.reduction, p.name). Throws PreconditionError for an unknown pair.
long long reevaluate(const ParameterRecord& p);

struct Provenance {
  std::string reduction;
  std::string source_digest;
  /// Stage records in application order; the last "r" record is instance.r.
  std::vector<ParameterRecord> parameters;
};

struct ReducedInstance {
  AllianceInstance instance;
  RoleMap roles;
  Provenance provenance;
  /// Deletion set for the tree-height claims (empty when none is claimed).
  VertexSet modulator;
  /// Stage reductions keep the input vertices as 0..source_order-1.
  std::size_t source_order = 0;
  std::optional<ChordDiagram> diagram;
  std::optional<Bipartition> bipartition;
  std::optional<SplitPartition> split;
  std::optional<VertexSet> declared_cover;
};

/// Wraps a bare alliance instance so stage reductions can consume it.
ReducedInstance as_reduced(AllianceInstance inst, VertexSet modulator = {});

struct LiftReport {
  VertexSet lifted;
  ViolationReport verification;
  std::size_t bound = 0;

  bool within_bound() const noexcept { return !lifted.empty() && lifted.size() <= bound; }
  bool ok() const noexcept { return verification.valid() && within_bound(); }
};

LiftReport make_lift_report(const AllianceInstance& inst, VertexSet lifted);

/// Vertices of `alliance` that belong to the stage input (identifiers < source_order).
VertexSet project_to_source(const ReducedInstance& out, const VertexSet& alliance);

// ---- MRSS to strong offensive alliance with forbidden and necessary vertices

/// Rejects vectors whose entries are all zero and dimensions whose target
/// exceeds the column sum by more than one (negative pendant count).
ReducedInstance mrss_to_soafn(const MrssInstance& inst, const ReductionOptions& opts = {});
/// Builds the alliance for the chosen vector indices; does not require them to be a witness.
LiftReport lift_mrss(const MrssInstance& inst, const ReducedInstance& out, const std::vector<std::size_t>& chosen);
/// Indices s with x_s in the alliance.
std::vector<std::size_t> project_mrss(const ReducedInstance& out, const VertexSet& alliance);

/// Replaces the necessary set by one new necessary vertex y behind a forbidden hub x.
ReducedInstance collapse_necessary(const ReducedInstance& in);
LiftReport lift_collapse(const ReducedInstance& out, const VertexSet& solution);

/// Strength 2 with one necessary vertex -> strength 1 with forbidden vertices only.
ReducedInstance soafn_to_oaf(const ReducedInstance& in);
LiftReport lift_soafn_oaf(const ReducedInstance& out, const VertexSet& solution);

/// Hangs a height-2 tree under every degree-1 forbidden vertex and drops the
/// forbidden set. Throws PreconditionError if the forbidden structure is invalid.
ReducedInstance oaf_to_oa(const ReducedInstance& in, const ReductionOptions& opts = {});
LiftReport lift_oaf_oa(const ReducedInstance& out, const VertexSet& solution);
/// Vertex count oaf_to_oa would produce, without building it.
std::size_t oaf_to_oa_order(const ReducedInstance& in);

struct MrssPipeline {
  /// mrss_to_soafn, collapse_necessary, soafn_to_oaf, oaf_to_oa outputs.
  std::vector<ReducedInstance> stages;
  const ReducedInstance& result() const { return stages.back(); }
};

MrssPipeline mrss_to_oa_pipeline(const MrssInstance& inst, const ReductionOptions& opts = {});
/// Stage-by-stage lift; the report is against the final instance.
LiftReport lift_pipeline(const MrssInstance& inst, const MrssPipeline& p, const std::vector<std::size_t>& chosen);
std::vector<std::size_t> project_pipeline(const MrssPipeline& p, const VertexSet& alliance);

// ---- Permutation hitting set with thin sets

ReducedInstance phs_to_oa(const PhsInstance& inst, const ReductionOptions& opts = {});
LiftReport lift_phs(const ReducedInstance& out, const Permutation& p);
/// Cells (i, j) with w(i,j) in the alliance, row-major.
std::vector<Cell> project_phs(const ReducedInstance& out, const VertexSet& alliance);
/// The permutation described by `cells` if it has exactly one cell per row.
std::optional<Permutation> cells_to_permutation(const std::vector<Cell>& cells, std::size_t k);

// ---- Closest string

ReducedInstance closest_string_to_oa(const ClosestStringInstance& inst, const ReductionOptions& opts = {});
LiftReport lift_closest_string(const ClosestStringInstance& inst, const ReducedInstance& out, const std::string& y);
/// Position i takes the second letter iff w(i,2) is in the alliance and w(i,1) is not.
std::string project_closest_string(const ClosestStringInstance& inst, const ReducedInstance& out,
                                   const VertexSet& alliance);

// ---- Vertex cover on max-degree-3 graphs

ReducedInstance vc3_to_oa_bipartite(const VcInstance& inst, const ReductionOptions& opts = {});
LiftReport lift_vc_bipartite(const ReducedInstance& out, const VertexSet& cover);
/// Copies in V_0, with each edge vertex in the alliance replaced by its lower endpoint.
VertexSet project_vc_bipartite(const ReducedInstance& out, const VertexSet& alliance);

ReducedInstance vc3_to_oa_split(const VcInstance& inst, const ReductionOptions& opts = {});
LiftReport lift_vc_split(const ReducedInstance& out, const VertexSet& cover);
/// Edge vertices in the alliance are replaced by their lower endpoint unless an
/// endpoint is already present; X is dropped; the rest is intersected with V.
VertexSet project_vc_split(const ReducedInstance& out, const VertexSet& alliance);

// ---- Planar dominating set to strong offensive alliance on apex graphs

/// Throws PreconditionError for a disconnected source graph.
ReducedInstance pds_to_soa_apex(const DsInstance& inst, const ReductionOptions& opts = {});
LiftReport lift_apex(const ReducedInstance& out, const VertexSet& dominating);
/// Both endpoints of every edge whose subdivision vertex is outside the
/// alliance are added; the result is intersected with V(G).
VertexSet project_apex(const ReducedInstance& out, const VertexSet& alliance);
/// |E| <= 3|V| - 6 on the output graph minus the apex vertex.
bool apex_edge_bound_holds(const ReducedInstance& out);

// ---- Dominating set on circle graphs

ReducedInstance circle_ds_to_oa(const CircleDsInstance& inst, const ReductionOptions& opts = {});
LiftReport lift_circle(const ReducedInstance& out, const VertexSet& dominating);
VertexSet project_circle(const ReducedInstance& out, const VertexSet& alliance);

}  // namespace oa
