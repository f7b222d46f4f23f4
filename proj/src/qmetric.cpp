#include "alexq/qmetric.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "alexq/error.hpp"

namespace alexq {

namespace {

void require_point(const QuasiMetric& d, std::size_t x) {
  if (x >= d.size()) throw Error(ErrorCode::OutOfRange, "point index " + std::to_string(x) + " out of range");
}

// Adds every pairwise combination produced by `op` until the set is stable.
void close_under(std::unordered_set<Mask>& family, Mask (*op)(Mask, Mask)) {
  std::vector<Mask> members(family.begin(), family.end());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Mask m = op(members[i], members[j]);
      if (family.insert(m).second) members.push_back(m);
    }
  }
}

}  // namespace

QuasiMetric::QuasiMetric(UniversePtr universe, std::vector<Rational> dist)
    : universe_(std::move(universe)), dist_(std::move(dist)) {
  if (!universe_) throw Error(ErrorCode::Argument, "quasi-metric without a universe");
  const std::size_t n = universe_->size();
  if (dist_.size() != n * n) {
    throw Error(ErrorCode::Argument, "distance matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  for (std::size_t i = 0; i < dist_.size(); ++i) {
    if (dist_[i] < 0) {
      throw Error(ErrorCode::Argument, "negative distance from " + universe_->label(i / n) + " to " +
                                           universe_->label(i % n));
    }
  }
}

const Rational& QuasiMetric::operator()(std::size_t x, std::size_t y) const {
  const std::size_t n = size();
  if (x >= n || y >= n) throw Error(ErrorCode::OutOfRange, "point index out of range");
  return dist_[x * n + y];
}

bool QuasiMetric::operator==(const QuasiMetric& other) const {
  return dist_ == other.dist_ && same_universe(universe_, other.universe_);
}

ValidationReport validate_quasimetric(const QuasiMetric& d) {
  ValidationReport report;
  const std::size_t n = d.size();

  for (std::size_t x = 0; x < n; ++x) {
    if (d(x, x) != 0) {
      report.violations.push_back({ViolationKind::NonzeroDiagonal, {x}, {}});
      break;
    }
  }
  [&] {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (d(x, y) > d(x, z) + d(z, y)) {
            report.violations.push_back({ViolationKind::TriangleInequality, {x, y, z}, {}});
            return;
          }
        }
      }
    }
  }();
  [&] {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        if (d(x, y) == 0 && d(y, x) == 0) {
          report.violations.push_back({ViolationKind::NotSeparated, {x, y}, {}});
          return;
        }
      }
    }
  }();
  return report;
}

EquidistanceReport is_equidistant(const QuasiMetric& d) {
  std::optional<Rational> t;
  for (const auto& v : d.entries()) {
    if (v == 0) continue;
    if (!t) {
      t = v;
    } else if (*t != v) {
      return {false, std::nullopt};
    }
  }
  return {true, t};
}

PointSubset open_ball(const QuasiMetric& d, std::size_t x, const Rational& r) {
  require_point(d, x);
  if (r <= 0) throw Error(ErrorCode::Argument, "ball radius must be positive");
  Mask ball = 0;
  for (std::size_t y = 0; y < d.size(); ++y) {
    if (d(x, y) < r) ball |= Mask{1} << y;
  }
  return {d.universe(), ball};
}

FiniteTopology ball_topology(const QuasiMetric& d) {
  auto report = validate_quasimetric(d);
  if (!report.valid()) {
    throw Error(ErrorCode::Invalid, "quasi-metric is invalid: " + report.summary(*d.universe()));
  }
  // A ball only changes when the radius crosses an attained distance.
  std::set<Rational> radii;
  Rational largest = 0;
  for (const auto& v : d.entries()) {
    if (v > 0) radii.insert(v);
    largest = std::max(largest, v);
  }
  radii.insert(largest + 1);

  const Mask carrier = d.universe()->full();
  std::unordered_set<Mask> family{0, carrier};
  for (std::size_t x = 0; x < d.size(); ++x) {
    for (const auto& r : radii) family.insert(open_ball(d, x, r).bits());
  }
  // Unions of an intersection-closed family are again intersection-closed.
  close_under(family, [](Mask a, Mask b) { return a & b; });
  close_under(family, [](Mask a, Mask b) { return a | b; });
  return make_topology_unchecked(SetFamily(d.universe(), {family.begin(), family.end()}));
}

QuasiMetric quasimetric_from_topology(const FiniteTopology& topo, const Rational& constant) {
  if (constant <= 0) throw Error(ErrorCode::Argument, "equidistance constant must be positive");
  if (!is_t0_closures(topo)) throw Error(ErrorCode::Precondition, "input topology is not T0");
  const std::size_t n = topo.size();
  const auto closures = point_closures(topo);
  std::vector<Rational> dist(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      dist[x * n + y] = has_point(closures[y], x) ? Rational(0) : constant;
    }
  }
  return QuasiMetric(topo.universe(), std::move(dist));
}

Rational distance_to_set(const QuasiMetric& d, std::size_t x, const PointSubset& a) {
  require_same_universe(d.universe(), a.universe());
  require_point(d, x);
  if (a.is_empty()) throw Error(ErrorCode::Argument, "distance to the empty set is undefined");
  std::optional<Rational> best;
  for (std::size_t p : a.members()) {
    if (!best || d(x, p) < *best) best = d(x, p);
  }
  return *best;
}

PointSubset closure_via_distance(const QuasiMetric& d, const PointSubset& a) {
  require_same_universe(d.universe(), a.universe());
  if (a.is_empty()) throw Error(ErrorCode::Argument, "closure via distance needs a nonempty set");
  Mask out = 0;
  for (std::size_t x = 0; x < d.size(); ++x) {
    if (distance_to_set(d, x, a) == 0) out |= Mask{1} << x;
  }
  return {d.universe(), out};
}

QuasiMetric symmetrize_max(const QuasiMetric& d) {
  const std::size_t n = d.size();
  std::vector<Rational> dist(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) dist[x * n + y] = std::max(d(x, y), d(y, x));
  }
  return QuasiMetric(d.universe(), std::move(dist));
}

}  // namespace alexq
