#include "alexq/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include "alexq/error.hpp"
#include "alexq/json_io.hpp"
#include "alexq/qmetric.hpp"

namespace alexq {

namespace {

using Clock = std::chrono::steady_clock;

// Bit s of `word` is set iff subset s belongs to the family. The empty set
// and the carrier are already known to be members.
bool word_is_topology(std::uint64_t word, std::size_t carrier) {
  std::uint64_t middle = word & ~std::uint64_t{1} & ~(std::uint64_t{1} << carrier);
  for (std::uint64_t a = middle; a != 0; a &= a - 1) {
    const auto s = static_cast<std::size_t>(std::countr_zero(a));
    for (std::uint64_t b = a & (a - 1); b != 0; b &= b - 1) {
      const auto t = static_cast<std::size_t>(std::countr_zero(b));
      if (((word >> (s | t)) & 1U) == 0 || ((word >> (s & t)) & 1U) == 0) return false;
    }
  }
  return true;
}

// Topology words of the candidates m in [begin, end); candidate m pins the
// empty set and the carrier and spreads m over the remaining bits.
void scan_range(std::uint64_t begin, std::uint64_t end, std::size_t carrier, std::vector<std::uint64_t>& out) {
  const std::uint64_t pinned = 1U | (std::uint64_t{1} << carrier);
  for (std::uint64_t m = begin; m < end; ++m) {
    const std::uint64_t word = pinned | (m << 1);
    if (word_is_topology(word, carrier)) out.push_back(word);
  }
}

std::vector<std::uint64_t> topology_words(std::size_t n, const OracleOptions& options) {
  if (n == 0) return {1};
  const std::size_t carrier = (std::size_t{1} << n) - 1;
  const std::uint64_t candidates = std::uint64_t{1} << (carrier - 1);

  constexpr std::uint64_t kChunk = std::uint64_t{1} << 20;
  const std::uint64_t chunks = (candidates + kChunk - 1) / kChunk;
  std::vector<std::vector<std::uint64_t>> found(chunks);
  std::atomic<std::uint64_t> next{0};
  std::mutex progress_lock;
  std::uint64_t scanned = 0;

  auto worker = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      const std::uint64_t begin = c * kChunk;
      const std::uint64_t end = std::min(candidates, begin + kChunk);
      scan_range(begin, end, carrier, found[c]);
      if (options.progress) {
        std::lock_guard lock(progress_lock);
        scanned += end - begin;
        options.progress(scanned, candidates);
      }
    }
  };

  unsigned workers = options.workers != 0 ? options.workers : std::thread::hardware_concurrency();
  workers = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, chunks));
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  pool.clear();

  std::vector<std::uint64_t> words;
  for (auto& chunk : found) words.insert(words.end(), chunk.begin(), chunk.end());
  return words;
}

FiniteTopology topology_of_word(const UniversePtr& universe, std::uint64_t word) {
  std::vector<Mask> opens;
  for (std::uint64_t w = word; w != 0; w &= w - 1) opens.push_back(static_cast<Mask>(std::countr_zero(w)));
  return make_topology_unchecked(SetFamily(universe, std::move(opens)));
}

bool safely(const std::function<bool()>& check) {
  try {
    return check();
  } catch (const Error&) {
    return false;
  }
}

bool check_t0_equivalence(const FiniteTopology& t) { return is_t0_separation(t) == is_t0_closures(t); }

bool check_closure_identity(const FiniteTopology& t) {
  const Mask carrier = t.universe()->full();
  for (Mask a = 1; a != 0 && a <= carrier; ++a) {
    if (!alexandroff_closure_identity(t, PointSubset(t.universe(), a))) return false;
  }
  return true;
}

bool check_metrization(const FiniteTopology& t) {
  const QuasiMetric d = quasimetric_from_topology(t);
  if (!validate_quasimetric(d).valid()) return false;
  const auto eq = is_equidistant(d);
  if (!eq.equidistant) return false;
  if (eq.t ? *eq.t != 1 : t.size() > 1) return false;
  const FiniteTopology balls = ball_topology(d);
  // The metrized space is T0 and satisfies the closure identity.
  return balls == t && is_t0_closures(balls) && check_closure_identity(balls);
}

bool check_topology_round_trip(const FiniteTopology& t) {
  if (!is_t0_closures(t)) return false;
  const auto m = PointClosureMap::of_topology(t);
  return validate_closure_map(m).valid() && synthesize_alexandroff(m) == t;
}

// ≈ classes of T0 topologies, keyed by their point-closure fingerprint.
using ClassIndex = std::map<std::vector<Mask>, std::vector<const FiniteTopology*>>;

ClassIndex index_classes(std::span<const FiniteTopology> t0) {
  ClassIndex classes;
  for (const auto& t : t0) classes[point_closures(t)].push_back(&t);
  return classes;
}

bool check_singleton_class(const FiniteTopology& t, const ClassIndex& classes) {
  auto it = classes.find(point_closures(t));
  if (it == classes.end()) return false;
  for (const auto* member : it->second) {
    if (!closures_equivalent(*member, t)) return false;
  }
  return it->second.size() == 1 && *it->second.front() == t;
}

bool check_class_coincidence(const FiniteTopology& t, const ClassIndex& classes) {
  if (!is_t0_closures(t)) return false;
  auto it = classes.find(point_closures(t));
  if (it == classes.end()) return false;
  const auto& members = it->second;

  const FiniteTopology alexandroff = synthesize_alexandroff(PointClosureMap::of_topology(t));

  std::vector<const FiniteTopology*> finest;
  for (const auto* candidate : members) {
    bool above_all = std::all_of(members.begin(), members.end(),
                                 [&](const FiniteTopology* other) { return is_finer(*candidate, *other); });
    if (above_all) finest.push_back(candidate);
  }
  if (finest.size() != 1) return false;

  const QuasiMetric d = quasimetric_from_topology(t);
  if (!is_equidistant(d).equidistant) return false;
  const FiniteTopology metrized = ball_topology(d);

  return closures_equivalent(alexandroff, t) && alexandroff == *finest.front() && metrized == alexandroff;
}

bool check_map(const PointClosureMap& m, const std::map<std::vector<Mask>, bool>& t0_fingerprints) {
  if (validate_closure_map(m).valid()) {
    const FiniteTopology t = synthesize_alexandroff(m);
    return is_t0_closures(t) && point_closures(t) == m.images();
  }
  // No T0 topology may realize an invalid map.
  return !t0_fingerprints.contains(m.images());
}

std::map<std::vector<Mask>, bool> fingerprints_of(std::span<const FiniteTopology> t0) {
  std::map<std::vector<Mask>, bool> out;
  for (const auto& t : t0) out[point_closures(t)] = true;
  return out;
}

constexpr std::array<TheoremId, 6> kTheorems = {
    TheoremId::ClosureMapBijection, TheoremId::EquidistantMetrization, TheoremId::T0Equivalence,
    TheoremId::ClosureIdentity,     TheoremId::ClassCoincidence,       TheoremId::SingletonClasses,
};

}  // namespace

void require_oracle_size(std::size_t n, const OracleOptions& options) {
  const std::size_t limit = options.allow_slow ? kSlowOracleLimit : kDefaultOracleLimit;
  if (n > limit) {
    throw Error(ErrorCode::OutOfRange,
                "carrier size " + std::to_string(n) + " exceeds the oracle limit of " + std::to_string(limit) +
                    (options.allow_slow ? "" : " (n = 5 needs allow-slow)"));
  }
}

std::uint64_t family_count(std::size_t n) {
  if (n > kSlowOracleLimit) throw Error(ErrorCode::OutOfRange, "family count overflows 64 bits");
  return std::uint64_t{1} << (std::size_t{1} << n);
}

std::uint64_t closure_map_count(std::size_t n) {
  if (n > kSlowOracleLimit) throw Error(ErrorCode::OutOfRange, "closure map count too large");
  return std::uint64_t{1} << (n * n);
}

std::vector<FiniteTopology> enumerate_topologies(std::size_t n, const OracleOptions& options) {
  require_oracle_size(n, options);
  const auto universe = PointUniverse::indexed(n);
  std::vector<FiniteTopology> out;
  for (std::uint64_t word : topology_words(n, options)) out.push_back(topology_of_word(universe, word));
  return out;
}

std::vector<FiniteTopology> enumerate_t0(std::size_t n, const OracleOptions& options) {
  auto all = enumerate_topologies(n, options);
  std::vector<FiniteTopology> out;
  for (auto& t : all) {
    if (is_t0_closures(t)) out.push_back(std::move(t));
  }
  return out;
}

void for_each_closure_map(std::size_t n, const OracleOptions& options,
                          const std::function<void(const PointClosureMap&)>& visit) {
  require_oracle_size(n, options);
  const auto universe = PointUniverse::indexed(n);
  const std::uint64_t count = closure_map_count(n);
  const Mask carrier = full_mask(n);
  std::vector<Mask> images(n);
  for (std::uint64_t k = 0; k < count; ++k) {
    for (std::size_t x = 0; x < n; ++x) images[x] = (k >> (n * x)) & carrier;
    visit(PointClosureMap(universe, images));
  }
}

std::vector<PointClosureMap> enumerate_closure_maps(std::size_t n, const OracleOptions& options) {
  std::vector<PointClosureMap> out;
  for_each_closure_map(n, options, [&](const PointClosureMap& m) { out.push_back(m); });
  return out;
}

CensusReport census(std::size_t n, const OracleOptions& options) {
  const auto start = Clock::now();
  CensusReport report;
  report.n = n;
  report.total_families = family_count(n);
  const auto topologies = enumerate_topologies(n, options);
  report.topologies = topologies.size();
  report.t0_topologies = static_cast<std::uint64_t>(
      std::count_if(topologies.begin(), topologies.end(), [](const auto& t) { return is_t0_closures(t); }));
  for_each_closure_map(n, options, [&](const PointClosureMap& m) {
    if (validate_closure_map(m).valid()) ++report.valid_closure_maps;
  });
  report.elapsed = Clock::now() - start;
  return report;
}

const char* to_string(TheoremId id) {
  switch (id) {
    case TheoremId::ClosureMapBijection: return "T3.1";
    case TheoremId::EquidistantMetrization: return "T3.4";
    case TheoremId::T0Equivalence: return "P2.1";
    case TheoremId::ClosureIdentity: return "P2.3";
    case TheoremId::ClassCoincidence: return "C3.4";
    case TheoremId::SingletonClasses: return "E3.5";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem_id(std::string_view text) {
  for (TheoremId id : kTheorems) {
    if (text == to_string(id)) return id;
  }
  return std::nullopt;
}

std::span<const TheoremId> all_theorems() { return kTheorems; }

TheoremCertificate run_topology_campaign(TheoremId theorem, std::size_t n,
                                         std::span<const FiniteTopology> instances,
                                         const std::function<bool(const FiniteTopology&)>& check) {
  const auto start = Clock::now();
  TheoremCertificate cert;
  cert.theorem = theorem;
  cert.n = n;
  for (const auto& t : instances) {
    ++cert.instances_checked;
    if (!safely([&] { return check(t); })) {
      cert.passed = false;
      cert.counterexample = to_json(t);
      break;
    }
  }
  cert.elapsed = Clock::now() - start;
  return cert;
}

bool check_closure_map_instance(const PointClosureMap& m) {
  const auto t0 = enumerate_t0(m.size(), oracle_options(true));
  const auto fingerprints = fingerprints_of(t0);
  return safely([&] { return check_map(m, fingerprints); });
}

bool check_topology_instance(TheoremId theorem, const FiniteTopology& topo) {
  if (theorem == TheoremId::ClassCoincidence || theorem == TheoremId::SingletonClasses) {
    const auto t0 = enumerate_t0(topo.size(), oracle_options(true));
    const auto classes = index_classes(t0);
    return safely([&] {
      return theorem == TheoremId::SingletonClasses ? check_singleton_class(topo, classes)
                                                    : check_class_coincidence(topo, classes);
    });
  }
  return safely([&] {
    switch (theorem) {
      case TheoremId::ClosureMapBijection: return check_topology_round_trip(topo);
      case TheoremId::EquidistantMetrization: return check_metrization(topo);
      case TheoremId::T0Equivalence: return check_t0_equivalence(topo);
      case TheoremId::ClosureIdentity: return check_closure_identity(topo);
      default: return false;
    }
  });
}

bool recheck_instance(TheoremId theorem, std::string_view instance_json) {
  switch (detect_document_kind(instance_json)) {
    case DocumentKind::Topology: {
      // Counterexamples may be families that only claim to be topologies.
      auto family = family_from_json(instance_json);
      if (!is_topology(family)) return false;
      return check_topology_instance(theorem, FiniteTopology(std::move(family)));
    }
    case DocumentKind::ClosureMap:
      if (theorem != TheoremId::ClosureMapBijection) {
        throw Error(ErrorCode::Argument, std::string("closure-map instances only apply to ") + to_string(theorem));
      }
      return check_closure_map_instance(closure_map_from_json(instance_json));
    case DocumentKind::QuasiMetric:
      break;
  }
  throw Error(ErrorCode::Argument, "theorem instances are topologies or closure maps");
}

TheoremCertificate verify(TheoremId theorem, std::size_t n, const OracleOptions& options) {
  require_oracle_size(n, options);
  const auto start = Clock::now();
  TheoremCertificate cert;

  switch (theorem) {
    case TheoremId::T0Equivalence:
      cert = run_topology_campaign(theorem, n, enumerate_topologies(n, options), check_t0_equivalence);
      break;
    case TheoremId::ClosureIdentity:
      cert = run_topology_campaign(theorem, n, enumerate_topologies(n, options), check_closure_identity);
      break;
    case TheoremId::EquidistantMetrization:
      cert = run_topology_campaign(theorem, n, enumerate_t0(n, options), check_metrization);
      break;
    case TheoremId::SingletonClasses:
    case TheoremId::ClassCoincidence: {
      const auto t0 = enumerate_t0(n, options);
      const auto classes = index_classes(t0);
      auto check = [&](const FiniteTopology& t) {
        return theorem == TheoremId::SingletonClasses ? check_singleton_class(t, classes)
                                                      : check_class_coincidence(t, classes);
      };
      cert = run_topology_campaign(theorem, n, t0, check);
      break;
    }
    case TheoremId::ClosureMapBijection: {
      const auto t0 = enumerate_t0(n, options);
      const auto fingerprints = fingerprints_of(t0);
      cert.theorem = theorem;
      cert.n = n;
      for_each_closure_map(n, options, [&](const PointClosureMap& m) {
        if (!cert.passed) return;
        ++cert.instances_checked;
        if (!safely([&] { return check_map(m, fingerprints); })) {
          cert.passed = false;
          cert.counterexample = to_json(m);
        }
      });
      if (cert.passed) {
        auto topology_side = run_topology_campaign(theorem, n, t0, check_topology_round_trip);
        cert.instances_checked += topology_side.instances_checked;
        cert.passed = topology_side.passed;
        cert.counterexample = topology_side.counterexample;
      }
      break;
    }
  }
  cert.elapsed = Clock::now() - start;
  return cert;
}

}  // namespace alexq
