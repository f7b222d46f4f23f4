#include "alexq/alexq.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "alexq/closure_map.hpp"
#include "alexq/error.hpp"
#include "alexq/json_io.hpp"
#include "alexq/oracle.hpp"
#include "alexq/qmetric.hpp"

struct alexq_topology {
  alexq::FiniteTopology value;
};
struct alexq_closure_map {
  alexq::PointClosureMap value;
};
struct alexq_qmetric {
  alexq::QuasiMetric value;
};
struct alexq_report {
  alexq::ValidationReport value;
  alexq::UniversePtr universe;
};
struct alexq_certificate {
  alexq::TheoremCertificate value;
};

namespace {

thread_local std::string last_error;

alexq_status status_of(alexq::ErrorCode code) {
  using alexq::ErrorCode;
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::Schema: return ALEXQ_ERROR_PARSE;
    case ErrorCode::Invalid: return ALEXQ_ERROR_INVALID;
    case ErrorCode::Precondition: return ALEXQ_ERROR_PRECONDITION;
    case ErrorCode::Argument: return ALEXQ_ERROR_ARGUMENT;
    case ErrorCode::OutOfRange: return ALEXQ_ERROR_RANGE;
    case ErrorCode::UniverseMismatch: return ALEXQ_ERROR_UNIVERSE_MISMATCH;
  }
  return ALEXQ_ERROR_INTERNAL;
}

alexq_status fail(alexq_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class Fn>
alexq_status guarded(Fn&& fn) {
  try {
    fn();
    return ALEXQ_OK;
  } catch (const alexq::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ALEXQ_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ALEXQ_ERROR_INTERNAL, e.what());
  }
}

template <class... Ptrs>
bool any_null(const Ptrs*... ptrs) {
  return ((ptrs == nullptr) || ...);
}

alexq_status null_argument() { return fail(ALEXQ_ERROR_ARGUMENT, "null argument"); }

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

alexq::PointSubset subset_of(const alexq::UniversePtr& universe, std::uint64_t bits) {
  return alexq::PointSubset(universe, bits);
}

}  // namespace

extern "C" {

const char* alexq_version(void) { return "1.0.0"; }

const char* alexq_last_error(void) { return last_error.c_str(); }

const char* alexq_status_name(alexq_status status) {
  switch (status) {
    case ALEXQ_OK: return "ok";
    case ALEXQ_ERROR_PARSE: return "parse error";
    case ALEXQ_ERROR_INVALID: return "invalid input";
    case ALEXQ_ERROR_PRECONDITION: return "precondition failed";
    case ALEXQ_ERROR_ARGUMENT: return "bad argument";
    case ALEXQ_ERROR_RANGE: return "out of range";
    case ALEXQ_ERROR_UNIVERSE_MISMATCH: return "universe mismatch";
    case ALEXQ_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void alexq_string_free(char* text) { std::free(text); }

alexq_status alexq_detect_document(const char* json, alexq_document_kind* out) {
  if (any_null(json, out)) return null_argument();
  return guarded([&] {
    switch (alexq::detect_document_kind(json)) {
      case alexq::DocumentKind::Topology: *out = ALEXQ_DOCUMENT_TOPOLOGY; break;
      case alexq::DocumentKind::ClosureMap: *out = ALEXQ_DOCUMENT_CLOSURE_MAP; break;
      case alexq::DocumentKind::QuasiMetric: *out = ALEXQ_DOCUMENT_QUASI_METRIC; break;
    }
  });
}

// Topologies

alexq_status alexq_topology_from_json(const char* json, alexq_topology** out) {
  if (any_null(json, out)) return null_argument();
  return guarded([&] { *out = new alexq_topology{alexq::topology_from_json(json)}; });
}

alexq_status alexq_topology_to_json(const alexq_topology* topo, char** out) {
  if (any_null(topo, out)) return null_argument();
  return guarded([&] { *out = copy_string(alexq::to_json(topo->value)); });
}

void alexq_topology_free(alexq_topology* topo) { delete topo; }

alexq_status alexq_topology_point_count(const alexq_topology* topo, size_t* out) {
  if (any_null(topo, out)) return null_argument();
  *out = topo->value.size();
  return ALEXQ_OK;
}

alexq_status alexq_topology_label(const alexq_topology* topo, size_t point, const char** out) {
  if (any_null(topo, out)) return null_argument();
  return guarded([&] { *out = topo->value.universe()->label(point).c_str(); });
}

alexq_status alexq_topology_open_count(const alexq_topology* topo, size_t* out) {
  if (any_null(topo, out)) return null_argument();
  *out = topo->value.opens().size();
  return ALEXQ_OK;
}

alexq_status alexq_topology_open(const alexq_topology* topo, size_t index, uint64_t* out) {
  if (any_null(topo, out)) return null_argument();
  const auto& sets = topo->value.opens().sets();
  if (index >= sets.size()) return fail(ALEXQ_ERROR_RANGE, "open-set index out of range");
  *out = sets[index];
  return ALEXQ_OK;
}

alexq_status alexq_topology_closure(const alexq_topology* topo, uint64_t subset, uint64_t* out) {
  if (any_null(topo, out)) return null_argument();
  return guarded([&] {
    *out = alexq::closure(topo->value, subset_of(topo->value.universe(), subset)).bits();
  });
}

alexq_status alexq_topology_point_closure(const alexq_topology* topo, size_t point, uint64_t* out) {
  if (any_null(topo, out)) return null_argument();
  return guarded([&] { *out = alexq::point_closure(topo->value, point).bits(); });
}

alexq_status alexq_topology_is_t0(const alexq_topology* topo, int* out) {
  if (any_null(topo, out)) return null_argument();
  return guarded([&] { *out = alexq::is_t0_closures(topo->value) ? 1 : 0; });
}

alexq_status alexq_topology_is_t0_separation(const alexq_topology* topo, int* out) {
  if (any_null(topo, out)) return null_argument();
  return guarded([&] { *out = alexq::is_t0_separation(topo->value) ? 1 : 0; });
}

alexq_status alexq_topology_is_finer(const alexq_topology* candidate, const alexq_topology* base, int* out) {
  if (any_null(candidate, base, out)) return null_argument();
  return guarded([&] { *out = alexq::is_finer(candidate->value, base->value) ? 1 : 0; });
}

alexq_status alexq_topology_equivalent(const alexq_topology* a, const alexq_topology* b, int* out) {
  if (any_null(a, b, out)) return null_argument();
  return guarded([&] { *out = alexq::closures_equivalent(a->value, b->value) ? 1 : 0; });
}

alexq_status alexq_topology_equal(const alexq_topology* a, const alexq_topology* b, int* out) {
  if (any_null(a, b, out)) return null_argument();
  return guarded([&] { *out = a->value == b->value ? 1 : 0; });
}

alexq_status alexq_topology_order(const alexq_topology* topo, int covering_only, uint64_t* rows, size_t row_count) {
  if (any_null(topo, rows)) return null_argument();
  return guarded([&] {
    const auto& t = topo->value;
    if (row_count < t.size()) throw alexq::Error(alexq::ErrorCode::Argument, "row buffer too small");
    if (!alexq::is_t0_closures(t)) throw alexq::Error(alexq::ErrorCode::Precondition, "input topology is not T0");
    const auto order = alexq::specialization_order(t);
    const auto edges = covering_only != 0 ? alexq::covering_relation(order) : alexq::strict_part(order);
    for (std::size_t x = 0; x < t.size(); ++x) rows[x] = edges.row(x);
  });
}

alexq_status alexq_family_check_json(const char* json, alexq_report** out) {
  if (any_null(json, out)) return null_argument();
  return guarded([&] {
    using alexq::Mask;
    using alexq::ViolationKind;
    const auto family = alexq::family_from_json(json);
    const auto& sets = family.sets();
    alexq::ValidationReport report;
    if (!family.contains(0)) report.violations.push_back({ViolationKind::MissingEmptySet, {}, {}});
    if (!family.contains(family.universe()->full())) {
      report.violations.push_back({ViolationKind::MissingCarrier, {}, {}});
    }
    auto first_pair = [&](ViolationKind kind, Mask (*combine)(Mask, Mask)) {
      for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
          if (!family.contains(combine(sets[i], sets[j]))) {
            report.violations.push_back({kind, {}, {sets[i], sets[j]}});
            return;
          }
        }
      }
    };
    first_pair(ViolationKind::NotUnionClosed, [](Mask a, Mask b) { return a | b; });
    first_pair(ViolationKind::NotIntersectionClosed, [](Mask a, Mask b) { return a & b; });
    *out = new alexq_report{std::move(report), family.universe()};
  });
}

// Point-closure maps

alexq_status alexq_closure_map_from_json(const char* json, alexq_closure_map** out) {
  if (any_null(json, out)) return null_argument();
  return guarded([&] { *out = new alexq_closure_map{alexq::closure_map_from_json(json)}; });
}

alexq_status alexq_closure_map_to_json(const alexq_closure_map* map, char** out) {
  if (any_null(map, out)) return null_argument();
  return guarded([&] { *out = copy_string(alexq::to_json(map->value)); });
}

void alexq_closure_map_free(alexq_closure_map* map) { delete map; }

alexq_status alexq_closure_map_of_topology(const alexq_topology* topo, alexq_closure_map** out) {
  if (any_null(topo, out)) return null_argument();
  return guarded([&] { *out = new alexq_closure_map{alexq::PointClosureMap::of_topology(topo->value)}; });
}

alexq_status alexq_closure_map_validate(const alexq_closure_map* map, alexq_report** out) {
  if (any_null(map, out)) return null_argument();
  return guarded([&] {
    *out = new alexq_report{alexq::validate_closure_map(map->value), map->value.universe()};
  });
}

alexq_status alexq_closure_map_extend(const alexq_closure_map* map, uint64_t subset, uint64_t* out) {
  if (any_null(map, out)) return null_argument();
  return guarded([&] {
    *out = alexq::extend_closure(map->value, subset_of(map->value.universe(), subset)).bits();
  });
}

alexq_status alexq_closure_map_synthesize(const alexq_closure_map* map, alexq_topology** out) {
  if (any_null(map, out)) return null_argument();
  return guarded([&] { *out = new alexq_topology{alexq::synthesize_alexandroff(map->value)}; });
}

// Reports

alexq_status alexq_report_valid(const alexq_report* report, int* out) {
  if (any_null(report, out)) return null_argument();
  *out = report->value.valid() ? 1 : 0;
  return ALEXQ_OK;
}

alexq_status alexq_report_violation_count(const alexq_report* report, size_t* out) {
  if (any_null(report, out)) return null_argument();
  *out = report->value.violations.size();
  return ALEXQ_OK;
}

alexq_status alexq_report_to_json(const alexq_report* report, char** out) {
  if (any_null(report, out)) return null_argument();
  return guarded([&] { *out = copy_string(alexq::to_json(report->value, *report->universe)); });
}

alexq_status alexq_report_violation_text(const alexq_report* report, size_t index, char** out) {
  if (any_null(report, out)) return null_argument();
  if (index >= report->value.violations.size()) return fail(ALEXQ_ERROR_RANGE, "violation index out of range");
  return guarded([&] {
    alexq::ValidationReport single{{report->value.violations[index]}};
    *out = copy_string(single.summary(*report->universe));
  });
}

void alexq_report_free(alexq_report* report) { delete report; }

// Quasi-metrics

alexq_status alexq_qmetric_from_json(const char* json, alexq_qmetric** out) {
  if (any_null(json, out)) return null_argument();
  return guarded([&] { *out = new alexq_qmetric{alexq::quasimetric_from_json(json)}; });
}

alexq_status alexq_qmetric_to_json(const alexq_qmetric* d, char** out) {
  if (any_null(d, out)) return null_argument();
  return guarded([&] { *out = copy_string(alexq::to_json(d->value)); });
}

void alexq_qmetric_free(alexq_qmetric* d) { delete d; }

alexq_status alexq_qmetric_from_topology(const alexq_topology* topo, const char* constant, alexq_qmetric** out) {
  if (any_null(topo, out)) return null_argument();
  return guarded([&] {
    const alexq::Rational c = constant != nullptr ? alexq::parse_rational(constant) : alexq::Rational(1);
    *out = new alexq_qmetric{alexq::quasimetric_from_topology(topo->value, c)};
  });
}

alexq_status alexq_qmetric_point_count(const alexq_qmetric* d, size_t* out) {
  if (any_null(d, out)) return null_argument();
  *out = d->value.size();
  return ALEXQ_OK;
}

alexq_status alexq_qmetric_label(const alexq_qmetric* d, size_t point, const char** out) {
  if (any_null(d, out)) return null_argument();
  return guarded([&] { *out = d->value.universe()->label(point).c_str(); });
}

alexq_status alexq_qmetric_entry(const alexq_qmetric* d, size_t from, size_t to, char** out) {
  if (any_null(d, out)) return null_argument();
  return guarded([&] { *out = copy_string(alexq::format_rational(d->value(from, to))); });
}

alexq_status alexq_qmetric_validate(const alexq_qmetric* d, alexq_report** out) {
  if (any_null(d, out)) return null_argument();
  return guarded([&] { *out = new alexq_report{alexq::validate_quasimetric(d->value), d->value.universe()}; });
}

alexq_status alexq_qmetric_equidistant(const alexq_qmetric* d, int* equidistant, char** t) {
  if (any_null(d, equidistant, t)) return null_argument();
  return guarded([&] {
    const auto report = alexq::is_equidistant(d->value);
    char* value = report.t ? copy_string(alexq::format_rational(*report.t)) : nullptr;
    *equidistant = report.equidistant ? 1 : 0;
    *t = value;
  });
}

alexq_status alexq_qmetric_open_ball(const alexq_qmetric* d, size_t center, const char* radius, uint64_t* out) {
  if (any_null(d, radius, out)) return null_argument();
  return guarded([&] { *out = alexq::open_ball(d->value, center, alexq::parse_rational(radius)).bits(); });
}

alexq_status alexq_qmetric_ball_topology(const alexq_qmetric* d, alexq_topology** out) {
  if (any_null(d, out)) return null_argument();
  return guarded([&] { *out = new alexq_topology{alexq::ball_topology(d->value)}; });
}

alexq_status alexq_qmetric_closure(const alexq_qmetric* d, uint64_t subset, uint64_t* out) {
  if (any_null(d, out)) return null_argument();
  return guarded([&] {
    *out = alexq::closure_via_distance(d->value, subset_of(d->value.universe(), subset)).bits();
  });
}

alexq_status alexq_qmetric_symmetrize(const alexq_qmetric* d, alexq_qmetric** out) {
  if (any_null(d, out)) return null_argument();
  return guarded([&] { *out = new alexq_qmetric{alexq::symmetrize_max(d->value)}; });
}

// Oracle

alexq_status alexq_census_run(size_t n, int allow_slow, alexq_census* out) {
  if (any_null(out)) return null_argument();
  return guarded([&] {
    const auto report = alexq::census(n, alexq::oracle_options(allow_slow != 0));
    *out = alexq_census{report.n,
                        report.total_families,
                        report.topologies,
                        report.t0_topologies,
                        report.valid_closure_maps,
                        report.elapsed.count()};
  });
}

alexq_status alexq_census_to_json(const alexq_census* census, int include_timing, char** out) {
  if (any_null(census, out)) return null_argument();
  return guarded([&] {
    alexq::CensusReport report;
    report.n = census->n;
    report.total_families = census->total_families;
    report.topologies = census->topologies;
    report.t0_topologies = census->t0_topologies;
    report.valid_closure_maps = census->valid_closure_maps;
    report.elapsed = std::chrono::duration<double>(census->elapsed_seconds);
    *out = copy_string(alexq::to_json(report, include_timing != 0));
  });
}

size_t alexq_theorem_count(void) { return alexq::all_theorems().size(); }

const char* alexq_theorem_id(size_t index) {
  const auto ids = alexq::all_theorems();
  return index < ids.size() ? alexq::to_string(ids[index]) : nullptr;
}

alexq_status alexq_verify(const char* theorem, size_t n, int allow_slow, alexq_certificate** out) {
  if (any_null(theorem, out)) return null_argument();
  const auto id = alexq::parse_theorem_id(theorem);
  if (!id) return fail(ALEXQ_ERROR_ARGUMENT, std::string("unknown theorem id \"") + theorem + "\"");
  return guarded([&] { *out = new alexq_certificate{alexq::verify(*id, n, alexq::oracle_options(allow_slow != 0))}; });
}

alexq_status alexq_certificate_passed(const alexq_certificate* cert, int* out) {
  if (any_null(cert, out)) return null_argument();
  *out = cert->value.passed ? 1 : 0;
  return ALEXQ_OK;
}

alexq_status alexq_certificate_to_json(const alexq_certificate* cert, int include_timing, char** out) {
  if (any_null(cert, out)) return null_argument();
  return guarded([&] { *out = copy_string(alexq::to_json(cert->value, include_timing != 0)); });
}

void alexq_certificate_free(alexq_certificate* cert) { delete cert; }

}  // extern "C"
