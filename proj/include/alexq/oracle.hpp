#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alexq/closure_map.hpp"
#include "alexq/topology.hpp"

namespace alexq {

/// Largest carrier enumerated by default, and the ceiling behind allow_slow.
inline constexpr std::size_t kDefaultOracleLimit = 4;
inline constexpr std::size_t kSlowOracleLimit = 5;

struct OracleOptions {
  bool allow_slow = false;
  /// Worker threads for the family scan; 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
  /// Called from the scanning thread with (candidates scanned, total candidates).
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

inline OracleOptions oracle_options(bool allow_slow) {
  OracleOptions options;
  options.allow_slow = allow_slow;
  return options;
}

/// Throws ErrorCode::OutOfRange when n exceeds the permitted carrier size.
void require_oracle_size(std::size_t n, const OracleOptions& options);

/// 2^(2^n): number of set families over an n-point carrier.
std::uint64_t family_count(std::size_t n);
/// (2^n)^n: number of maps X -> 2^X.
std::uint64_t closure_map_count(std::size_t n);

/// Every topology on the indexed n-point carrier, found by testing every
/// family of subsets, in ascending order of the family's indicator word.
std::vector<FiniteTopology> enumerate_topologies(std::size_t n, const OracleOptions& options = {});

/// The T0 sub-sequence of enumerate_topologies().
std::vector<FiniteTopology> enumerate_t0(std::size_t n, const OracleOptions& options = {});

/// Visits all (2^n)^n maps; map k sends x to bits [n*x, n*x + n) of k.
void for_each_closure_map(std::size_t n, const OracleOptions& options,
                          const std::function<void(const PointClosureMap&)>& visit);

std::vector<PointClosureMap> enumerate_closure_maps(std::size_t n, const OracleOptions& options = {});

struct CensusReport {
  std::size_t n = 0;
  std::uint64_t total_families = 0;
  std::uint64_t topologies = 0;
  std::uint64_t t0_topologies = 0;
  std::uint64_t valid_closure_maps = 0;
  std::chrono::duration<double> elapsed{};
};

CensusReport census(std::size_t n, const OracleOptions& options = {});

enum class TheoremId {
  ClosureMapBijection,     // point-closure maps <-> T0 Alexandroff topologies
  EquidistantMetrization,  // T0 Alexandroff <-> equidistant quasi-metrizable
  T0Equivalence,           // separation by opens <-> distinct point closures
  ClosureIdentity,         // cl(A) = union of point closures
  ClassCoincidence,        // the Alexandroff, finest and metrizable class members agree
  SingletonClasses,        // every ≈ class of T0 topologies is a singleton
};

/// Serialized ids: "T3.1", "T3.4", "P2.1", "P2.3", "C3.4", "E3.5".
const char* to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view text);
std::span<const TheoremId> all_theorems();

struct TheoremCertificate {
  TheoremId theorem{};
  std::size_t n = 0;
  std::uint64_t instances_checked = 0;
  bool passed = true;
  /// Self-contained JSON instance (topology or closure map) that fails the check.
  std::optional<std::string> counterexample;
  std::chrono::duration<double> elapsed{};
};

TheoremCertificate verify(TheoremId theorem, std::size_t n, const OracleOptions& options = {});

/// Runs `check` over `instances` in order and records the first failure.
TheoremCertificate run_topology_campaign(TheoremId theorem, std::size_t n,
                                         std::span<const FiniteTopology> instances,
                                         const std::function<bool(const FiniteTopology&)>& check);

/// Per-instance checks. The topology-side checks take any topology; those that
/// quantify over a whole class (SingletonClasses, ClassCoincidence) re-enumerate
/// the T0 topologies of the same carrier size.
bool check_topology_instance(TheoremId theorem, const FiniteTopology& topo);
bool check_closure_map_instance(const PointClosureMap& m);

/// Parses a serialized counterexample and re-runs the named check on it.
/// Returns true iff the instance passes.
bool recheck_instance(TheoremId theorem, std::string_view instance_json);

}  // namespace alexq
