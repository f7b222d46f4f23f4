/*
 * alexq: finite T0-Alexandroff topologies, point-closure maps and
 * equidistant quasi-metrics behind a plain C interface.
 *
 * Conventions
 *   - Objects are opaque handles created by alexq_*_from_* / alexq_*_to_*
 *     style constructors and released with the matching alexq_*_free.
 *   - Every fallible call returns an alexq_status. On failure the output
 *     parameters are untouched and alexq_last_error() describes the problem
 *     (thread-local, valid until the next failing call on the same thread).
 *   - Subsets cross the boundary as uint64_t membership words: bit i is
 *     point i in the order of the document's "points" array.
 *   - Strings returned through char** are owned by the caller and must be
 *     released with alexq_string_free.
 */
#ifndef ALEXQ_ALEXQ_H
#define ALEXQ_ALEXQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ALEXQ_BUILDING_LIBRARY)
#    define ALEXQ_API __declspec(dllexport)
#  else
#    define ALEXQ_API __declspec(dllimport)
#  endif
#else
#  define ALEXQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum alexq_status {
  ALEXQ_OK = 0,
  ALEXQ_ERROR_PARSE = 1,        /* malformed JSON or a schema violation */
  ALEXQ_ERROR_INVALID = 2,      /* well-formed input describing an invalid object */
  ALEXQ_ERROR_PRECONDITION = 3, /* e.g. a non-T0 topology where T0 is required */
  ALEXQ_ERROR_ARGUMENT = 4,
  ALEXQ_ERROR_RANGE = 5,
  ALEXQ_ERROR_UNIVERSE_MISMATCH = 6,
  ALEXQ_ERROR_INTERNAL = 7
} alexq_status;

typedef enum alexq_document_kind {
  ALEXQ_DOCUMENT_TOPOLOGY = 0,
  ALEXQ_DOCUMENT_CLOSURE_MAP = 1,
  ALEXQ_DOCUMENT_QUASI_METRIC = 2
} alexq_document_kind;

typedef struct alexq_topology alexq_topology;
typedef struct alexq_closure_map alexq_closure_map;
typedef struct alexq_qmetric alexq_qmetric;
typedef struct alexq_report alexq_report;
typedef struct alexq_certificate alexq_certificate;

typedef struct alexq_census {
  size_t n;
  uint64_t total_families;
  uint64_t topologies;
  uint64_t t0_topologies;
  uint64_t valid_closure_maps;
  double elapsed_seconds;
} alexq_census;

ALEXQ_API const char* alexq_version(void);
ALEXQ_API const char* alexq_last_error(void);
ALEXQ_API const char* alexq_status_name(alexq_status status);
ALEXQ_API void alexq_string_free(char* text);

ALEXQ_API alexq_status alexq_detect_document(const char* json, alexq_document_kind* out);

/* Topologies */
ALEXQ_API alexq_status alexq_topology_from_json(const char* json, alexq_topology** out);
ALEXQ_API alexq_status alexq_topology_to_json(const alexq_topology* topo, char** out);
ALEXQ_API void alexq_topology_free(alexq_topology* topo);
ALEXQ_API alexq_status alexq_topology_point_count(const alexq_topology* topo, size_t* out);
/* Borrowed; valid while the handle lives. */
ALEXQ_API alexq_status alexq_topology_label(const alexq_topology* topo, size_t point, const char** out);
ALEXQ_API alexq_status alexq_topology_open_count(const alexq_topology* topo, size_t* out);
ALEXQ_API alexq_status alexq_topology_open(const alexq_topology* topo, size_t index, uint64_t* out);
ALEXQ_API alexq_status alexq_topology_closure(const alexq_topology* topo, uint64_t subset, uint64_t* out);
ALEXQ_API alexq_status alexq_topology_point_closure(const alexq_topology* topo, size_t point, uint64_t* out);
/* T0 via distinct point closures, and via separating open sets. */
ALEXQ_API alexq_status alexq_topology_is_t0(const alexq_topology* topo, int* out);
ALEXQ_API alexq_status alexq_topology_is_t0_separation(const alexq_topology* topo, int* out);
ALEXQ_API alexq_status alexq_topology_is_finer(const alexq_topology* candidate, const alexq_topology* base, int* out);
ALEXQ_API alexq_status alexq_topology_equivalent(const alexq_topology* a, const alexq_topology* b, int* out);
ALEXQ_API alexq_status alexq_topology_equal(const alexq_topology* a, const alexq_topology* b, int* out);
/*
 * Fills rows[x] (for x < point count) with the points y such that x ⊑ y,
 * where x ⊑ y iff x lies in the closure of {y}. With covering_only set the
 * rows hold the covering pairs (Hasse edges); otherwise every pair with
 * x != y. Fails with ALEXQ_ERROR_PRECONDITION for a non-T0 topology.
 */
ALEXQ_API alexq_status alexq_topology_order(const alexq_topology* topo, int covering_only, uint64_t* rows,
                                            size_t row_count);
/* Checks a {"points","opens"} document against the topology axioms. */
ALEXQ_API alexq_status alexq_family_check_json(const char* json, alexq_report** out);

/* Point-closure maps */
ALEXQ_API alexq_status alexq_closure_map_from_json(const char* json, alexq_closure_map** out);
ALEXQ_API alexq_status alexq_closure_map_to_json(const alexq_closure_map* map, char** out);
ALEXQ_API void alexq_closure_map_free(alexq_closure_map* map);
ALEXQ_API alexq_status alexq_closure_map_of_topology(const alexq_topology* topo, alexq_closure_map** out);
ALEXQ_API alexq_status alexq_closure_map_validate(const alexq_closure_map* map, alexq_report** out);
ALEXQ_API alexq_status alexq_closure_map_extend(const alexq_closure_map* map, uint64_t subset, uint64_t* out);
ALEXQ_API alexq_status alexq_closure_map_synthesize(const alexq_closure_map* map, alexq_topology** out);

/* Validation reports */
ALEXQ_API alexq_status alexq_report_valid(const alexq_report* report, int* out);
ALEXQ_API alexq_status alexq_report_violation_count(const alexq_report* report, size_t* out);
ALEXQ_API alexq_status alexq_report_to_json(const alexq_report* report, char** out);
/* One line per violation, e.g. "NotHereditary(c, b)". */
ALEXQ_API alexq_status alexq_report_violation_text(const alexq_report* report, size_t index, char** out);
ALEXQ_API void alexq_report_free(alexq_report* report);

/* Quasi-metrics; distances cross the boundary as "p" or "p/q" strings. */
ALEXQ_API alexq_status alexq_qmetric_from_json(const char* json, alexq_qmetric** out);
ALEXQ_API alexq_status alexq_qmetric_to_json(const alexq_qmetric* d, char** out);
ALEXQ_API void alexq_qmetric_free(alexq_qmetric* d);
/* constant may be NULL for the default of 1. */
ALEXQ_API alexq_status alexq_qmetric_from_topology(const alexq_topology* topo, const char* constant,
                                                   alexq_qmetric** out);
ALEXQ_API alexq_status alexq_qmetric_point_count(const alexq_qmetric* d, size_t* out);
ALEXQ_API alexq_status alexq_qmetric_label(const alexq_qmetric* d, size_t point, const char** out);
ALEXQ_API alexq_status alexq_qmetric_entry(const alexq_qmetric* d, size_t from, size_t to, char** out);
ALEXQ_API alexq_status alexq_qmetric_validate(const alexq_qmetric* d, alexq_report** out);
/* *t is set to NULL when every distance is zero. */
ALEXQ_API alexq_status alexq_qmetric_equidistant(const alexq_qmetric* d, int* equidistant, char** t);
ALEXQ_API alexq_status alexq_qmetric_open_ball(const alexq_qmetric* d, size_t center, const char* radius,
                                               uint64_t* out);
ALEXQ_API alexq_status alexq_qmetric_ball_topology(const alexq_qmetric* d, alexq_topology** out);
ALEXQ_API alexq_status alexq_qmetric_closure(const alexq_qmetric* d, uint64_t subset, uint64_t* out);
ALEXQ_API alexq_status alexq_qmetric_symmetrize(const alexq_qmetric* d, alexq_qmetric** out);

/* Exhaustive oracle. n = 5 requires allow_slow. */
ALEXQ_API alexq_status alexq_census_run(size_t n, int allow_slow, alexq_census* out);
ALEXQ_API alexq_status alexq_census_to_json(const alexq_census* census, int include_timing, char** out);
ALEXQ_API size_t alexq_theorem_count(void);
/* Ids are "T3.1", "T3.4", "P2.1", "P2.3", "C3.4" and "E3.5"; NULL past the end. */
ALEXQ_API const char* alexq_theorem_id(size_t index);
ALEXQ_API alexq_status alexq_verify(const char* theorem, size_t n, int allow_slow, alexq_certificate** out);
ALEXQ_API alexq_status alexq_certificate_passed(const alexq_certificate* cert, int* out);
ALEXQ_API alexq_status alexq_certificate_to_json(const alexq_certificate* cert, int include_timing, char** out);
ALEXQ_API void alexq_certificate_free(alexq_certificate* cert);

#ifdef __cplusplus
}
#endif

#endif /* ALEXQ_ALEXQ_H */
