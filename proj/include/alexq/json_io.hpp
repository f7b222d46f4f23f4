#pragma once

#include <string>
#include <string_view>

#include "alexq/closure_map.hpp"
#include "alexq/oracle.hpp"
#include "alexq/qmetric.hpp"
#include "alexq/report.hpp"
#include "alexq/topology.hpp"

// Wire formats. Every writer emits a single compact line with subsets listed
// in universe order and families in canonical order, so equal values
// serialize to equal bytes. Readers throw ErrorCode::Parse for malformed
// JSON and ErrorCode::Schema (naming the offending field) for layout errors.

namespace alexq {

enum class DocumentKind { Topology, ClosureMap, QuasiMetric };

/// Classifies a document by its keys: "opens", "closure" or "dist".
DocumentKind detect_document_kind(std::string_view json);

/// {"points": [...], "opens": [[...], ...]}, not checked against the topology axioms.
SetFamily family_from_json(std::string_view json);
/// As family_from_json(), then ErrorCode::Invalid unless the family is a topology.
FiniteTopology topology_from_json(std::string_view json);
std::string to_json(const FiniteTopology& topo);

/// {"points": [...], "closure": {"a": [...], ...}}
PointClosureMap closure_map_from_json(std::string_view json);
std::string to_json(const PointClosureMap& m);

/// {"points": [...], "dist": [["0","1"], ...]}
QuasiMetric quasimetric_from_json(std::string_view json);
std::string to_json(const QuasiMetric& d);

/// {"valid": bool, "violations": [{"kind": ..., "points": [...], "subsets": [...]}]}
std::string to_json(const ValidationReport& report, const PointUniverse& universe);

std::string to_json(const CensusReport& report, bool include_timing);
std::string to_json(const TheoremCertificate& certificate, bool include_timing);

/// Member labels of a mask in universe order.
std::vector<std::string> labels_of(const PointUniverse& universe, Mask set);

}  // namespace alexq
