#pragma once

#include <optional>
#include <vector>

#include "alexq/rational.hpp"
#include "alexq/report.hpp"
#include "alexq/topology.hpp"

namespace alexq {

/// An n×n matrix of nonnegative exact distances; row = from, column = to.
/// The triangle inequality and separation are checked by
/// validate_quasimetric(), not enforced here.
class QuasiMetric {
 public:
  /// `dist` is row-major. Throws ErrorCode::Argument for a negative entry
  /// or a shape that does not match the carrier.
  QuasiMetric(UniversePtr universe, std::vector<Rational> dist);

  const UniversePtr& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return universe_->size(); }
  const Rational& operator()(std::size_t x, std::size_t y) const;
  const std::vector<Rational>& entries() const noexcept { return dist_; }

  bool operator==(const QuasiMetric& other) const;

 private:
  UniversePtr universe_;
  std::vector<Rational> dist_;
};

ValidationReport validate_quasimetric(const QuasiMetric& d);

struct EquidistanceReport {
  bool equidistant = false;
  std::optional<Rational> t;  // absent when every distance is zero
};

EquidistanceReport is_equidistant(const QuasiMetric& d);

/// {y : d(x, y) < r}. Throws ErrorCode::Argument unless r > 0.
PointSubset open_ball(const QuasiMetric& d, std::size_t x, const Rational& r);

/// Topology generated by every open ball. Throws ErrorCode::Invalid for an
/// invalid quasi-metric.
FiniteTopology ball_topology(const QuasiMetric& d);

/// d(x, y) = 0 when x ∈ cl({y}), `constant` otherwise. Throws
/// ErrorCode::Precondition for a non-T0 topology and ErrorCode::Argument
/// unless constant > 0.
QuasiMetric quasimetric_from_topology(const FiniteTopology& topo, const Rational& constant = 1);

/// min over a ∈ A of d(x, a). Throws ErrorCode::Argument for empty A.
Rational distance_to_set(const QuasiMetric& d, std::size_t x, const PointSubset& a);

/// {x : d(x, A) = 0}. Throws ErrorCode::Argument for empty A.
PointSubset closure_via_distance(const QuasiMetric& d, const PointSubset& a);

/// (x, y) -> max{d(x, y), d(y, x)}.
QuasiMetric symmetrize_max(const QuasiMetric& d);

}  // namespace alexq
