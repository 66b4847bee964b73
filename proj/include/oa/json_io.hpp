#pragma once

#include <string>

#include "json.hpp"
#include "oa/alliance.hpp"
#include "oa/chord_diagram.hpp"
#include "oa/roles.hpp"
#include "oa/sources.hpp"

namespace oa {

using Json = nlohmann::ordered_json;

// Instance files carry a "kind" field: mrss, phs, closest_string, vc, ds,
// circle_ds or alliance. Graphs are given as "n" plus "edges": [[u, v], ...].

Json to_json(const MrssInstance& inst);
Json to_json(const PhsInstance& inst);
Json to_json(const ClosestStringInstance& inst);
Json to_json(const VcInstance& inst);
Json to_json(const DsInstance& inst);
Json to_json(const CircleDsInstance& inst);
Json to_json(const AllianceInstance& inst);
Json to_json(const VertexSet& s);
Json to_json(const ViolationReport& report);
/// Identifier -> role string.
Json to_json(const RoleMap& roles);

/// Throw GraphInputError / PreconditionError on malformed documents.
MrssInstance mrss_from_json(const Json& j);
PhsInstance phs_from_json(const Json& j);
ClosestStringInstance closest_string_from_json(const Json& j);
VcInstance vc_from_json(const Json& j);
DsInstance ds_from_json(const Json& j);
CircleDsInstance circle_ds_from_json(const Json& j);
AllianceInstance alliance_from_json(const Json& j);
VertexSet vertex_set_from_json(const Json& j);

/// 64-bit FNV-1a of the compact serialization, as 16 hex digits.
std::string digest(const Json& j);

/// Comma-separated 0-based identifiers ("" is the empty set).
VertexSet parse_vertex_list(const std::string& text);
std::string format_vertex_list(const VertexSet& s);

}  // namespace oa
