#include "alexq/json_io.hpp"

#include <initializer_list>

#include <json.hpp>

#include "alexq/error.hpp"

namespace alexq {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& field, const std::string& message) {
  throw Error(ErrorCode::Schema, field + ": " + message);
}

json parse_object(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) schema_error("document", "expected a JSON object");
  return doc;
}

void require_keys(const json& doc, std::initializer_list<const char*> keys) {
  for (const char* key : keys) {
    if (!doc.contains(key)) schema_error(key, "missing required field");
  }
  for (const auto& [key, value] : doc.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) schema_error(key, "unknown field");
  }
}

UniversePtr parse_points(const json& doc) {
  const json& points = doc.at("points");
  if (!points.is_array()) schema_error("points", "expected an array of labels");
  if (points.size() > kMaxPoints) schema_error("points", "at most 64 points are supported");
  std::vector<std::string> labels;
  labels.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string field = "points[" + std::to_string(i) + "]";
    if (!points[i].is_string()) schema_error(field, "expected a string label");
    std::string label = points[i].get<std::string>();
    for (const auto& seen : labels) {
      if (seen == label) schema_error(field, "duplicate label \"" + label + "\"");
    }
    labels.push_back(std::move(label));
  }
  return PointUniverse::make(std::move(labels));
}

Mask parse_subset(const PointUniverse& universe, const json& items, const std::string& field) {
  if (!items.is_array()) schema_error(field, "expected an array of labels");
  Mask out = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string item_field = field + "[" + std::to_string(i) + "]";
    if (!items[i].is_string()) schema_error(item_field, "expected a string label");
    const auto label = items[i].get<std::string>();
    auto index = universe.index_of(label);
    if (!index) schema_error(item_field, "unknown point \"" + label + "\"");
    if (has_point(out, *index)) schema_error(item_field, "duplicate point \"" + label + "\"");
    out |= Mask{1} << *index;
  }
  return out;
}

ordered_json subset_json(const PointUniverse& universe, Mask set) {
  ordered_json out = ordered_json::array();
  for (auto& label : labels_of(universe, set)) out.push_back(std::move(label));
  return out;
}

ordered_json points_json(const PointUniverse& universe) {
  ordered_json out = ordered_json::array();
  for (const auto& label : universe.labels()) out.push_back(label);
  return out;
}

std::string dump(const ordered_json& doc) { return doc.dump(); }

}  // namespace

std::vector<std::string> labels_of(const PointUniverse& universe, Mask set) {
  std::vector<std::string> out;
  for (std::size_t i : members_of(set)) out.push_back(universe.label(i));
  return out;
}

DocumentKind detect_document_kind(std::string_view text) {
  const json doc = parse_object(text);
  if (doc.contains("closure")) return DocumentKind::ClosureMap;
  if (doc.contains("dist")) return DocumentKind::QuasiMetric;
  if (doc.contains("opens")) return DocumentKind::Topology;
  schema_error("document", "expected one of the fields \"opens\", \"closure\" or \"dist\"");
}

SetFamily family_from_json(std::string_view text) {
  const json doc = parse_object(text);
  require_keys(doc, {"points", "opens"});
  auto universe = parse_points(doc);
  const json& opens = doc.at("opens");
  if (!opens.is_array()) schema_error("opens", "expected an array of subsets");
  std::vector<Mask> sets;
  sets.reserve(opens.size());
  for (std::size_t i = 0; i < opens.size(); ++i) {
    sets.push_back(parse_subset(*universe, opens[i], "opens[" + std::to_string(i) + "]"));
  }
  return SetFamily(std::move(universe), std::move(sets));
}

FiniteTopology topology_from_json(std::string_view text) {
  auto family = family_from_json(text);
  if (!is_topology(family)) {
    throw Error(ErrorCode::Invalid, "opens: family is not a topology");
  }
  return FiniteTopology(std::move(family));
}

std::string to_json(const FiniteTopology& topo) {
  const auto& universe = *topo.universe();
  ordered_json doc;
  doc["points"] = points_json(universe);
  ordered_json opens = ordered_json::array();
  for (Mask o : topo.opens().sets()) opens.push_back(subset_json(universe, o));
  doc["opens"] = std::move(opens);
  return dump(doc);
}

PointClosureMap closure_map_from_json(std::string_view text) {
  const json doc = parse_object(text);
  require_keys(doc, {"points", "closure"});
  auto universe = parse_points(doc);
  const json& closure = doc.at("closure");
  if (!closure.is_object()) schema_error("closure", "expected an object keyed by point label");
  for (const auto& [key, value] : closure.items()) {
    if (!universe->index_of(key)) schema_error("closure", "unknown point \"" + key + "\"");
  }
  std::vector<Mask> images(universe->size());
  for (std::size_t x = 0; x < universe->size(); ++x) {
    const auto& label = universe->label(x);
    auto it = closure.find(label);
    if (it == closure.end()) schema_error("closure", "missing entry for point \"" + label + "\"");
    images[x] = parse_subset(*universe, *it, "closure." + label);
  }
  return PointClosureMap(std::move(universe), std::move(images));
}

std::string to_json(const PointClosureMap& m) {
  const auto& universe = *m.universe();
  ordered_json doc;
  doc["points"] = points_json(universe);
  ordered_json closure = ordered_json::object();
  for (std::size_t x = 0; x < m.size(); ++x) closure[universe.label(x)] = subset_json(universe, m.images()[x]);
  doc["closure"] = std::move(closure);
  return dump(doc);
}

QuasiMetric quasimetric_from_json(std::string_view text) {
  const json doc = parse_object(text);
  require_keys(doc, {"points", "dist"});
  auto universe = parse_points(doc);
  const std::size_t n = universe->size();
  const json& dist = doc.at("dist");
  if (!dist.is_array() || dist.size() != n) {
    schema_error("dist", "expected " + std::to_string(n) + " rows");
  }
  std::vector<Rational> entries;
  entries.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::string row_field = "dist[" + std::to_string(x) + "]";
    if (!dist[x].is_array() || dist[x].size() != n) {
      schema_error(row_field, "expected " + std::to_string(n) + " entries");
    }
    for (std::size_t y = 0; y < n; ++y) {
      const std::string field = row_field + "[" + std::to_string(y) + "]";
      if (!dist[x][y].is_string()) schema_error(field, "expected a rational string such as \"1\" or \"3/2\"");
      Rational value;
      try {
        value = parse_rational(dist[x][y].get<std::string>());
      } catch (const Error& e) {
        schema_error(field, e.what());
      }
      if (value < 0) schema_error(field, "distances must be nonnegative");
      entries.push_back(std::move(value));
    }
  }
  return QuasiMetric(std::move(universe), std::move(entries));
}

std::string to_json(const QuasiMetric& d) {
  const auto& universe = *d.universe();
  ordered_json doc;
  doc["points"] = points_json(universe);
  ordered_json rows = ordered_json::array();
  for (std::size_t x = 0; x < d.size(); ++x) {
    ordered_json row = ordered_json::array();
    for (std::size_t y = 0; y < d.size(); ++y) row.push_back(format_rational(d(x, y)));
    rows.push_back(std::move(row));
  }
  doc["dist"] = std::move(rows);
  return dump(doc);
}

std::string to_json(const ValidationReport& report, const PointUniverse& universe) {
  ordered_json doc;
  doc["valid"] = report.valid();
  ordered_json violations = ordered_json::array();
  for (const auto& v : report.violations) {
    ordered_json item;
    item["kind"] = to_string(v.kind);
    ordered_json points = ordered_json::array();
    for (std::size_t p : v.points) points.push_back(universe.label(p));
    item["points"] = std::move(points);
    if (!v.subsets.empty()) {
      ordered_json subsets = ordered_json::array();
      for (Mask s : v.subsets) subsets.push_back(subset_json(universe, s));
      item["subsets"] = std::move(subsets);
    }
    violations.push_back(std::move(item));
  }
  doc["violations"] = std::move(violations);
  return dump(doc);
}

std::string to_json(const CensusReport& report, bool include_timing) {
  ordered_json doc;
  doc["n"] = report.n;
  doc["total_families"] = report.total_families;
  doc["topologies"] = report.topologies;
  doc["t0_topologies"] = report.t0_topologies;
  doc["valid_closure_maps"] = report.valid_closure_maps;
  if (include_timing) doc["elapsed_seconds"] = report.elapsed.count();
  return dump(doc);
}

std::string to_json(const TheoremCertificate& certificate, bool include_timing) {
  ordered_json doc;
  doc["theorem"] = to_string(certificate.theorem);
  doc["n"] = certificate.n;
  doc["instances_checked"] = certificate.instances_checked;
  doc["passed"] = certificate.passed;
  if (certificate.counterexample) {
    doc["counterexample"] = ordered_json::parse(*certificate.counterexample);
  } else {
    doc["counterexample"] = nullptr;
  }
  if (include_timing) doc["elapsed_seconds"] = certificate.elapsed.count();
  return dump(doc);
}

}  // namespace alexq
