#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "alexq/report.hpp"
#include "alexq/topology.hpp"

namespace alexq {

/// A candidate singleton-closure assignment x -> cl1(x). Invalid maps are
/// representable; validate_closure_map() diagnoses them.
class PointClosureMap {
 public:
  PointClosureMap(UniversePtr universe, std::vector<Mask> images);

  /// The point closures of a topology.
  static PointClosureMap of_topology(const FiniteTopology& topo);

  const UniversePtr& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return images_.size(); }
  const std::vector<Mask>& images() const noexcept { return images_; }
  PointSubset image(std::size_t x) const;

  bool operator==(const PointClosureMap& other) const;

 private:
  UniversePtr universe_;
  std::vector<Mask> images_;
};

ValidationReport validate_closure_map(const PointClosureMap& m);

/// ∅ for the empty set, otherwise the union of cl1(x) over x ∈ a.
/// Throws ErrorCode::Invalid for an invalid map.
PointSubset extend_closure(const PointClosureMap& m, const PointSubset& a);

/// A map 2^X -> 2^X. Carriers of up to kMaxTabulatedPoints points store the
/// full table; larger ones are backed by a point-closure map and evaluated
/// on demand.
class ClosureOperator {
 public:
  static constexpr std::size_t kMaxTabulatedPoints = 16;

  /// Tabulates `fn` over every subset. Throws ErrorCode::OutOfRange above 16 points.
  static ClosureOperator tabulate(UniversePtr universe, const std::function<Mask(Mask)>& fn);
  /// The extension of a valid map. Throws ErrorCode::Invalid otherwise.
  static ClosureOperator from_map(const PointClosureMap& m);

  const UniversePtr& universe() const noexcept { return universe_; }
  bool tabulated() const noexcept { return !table_.empty(); }
  Mask apply(Mask a) const;
  PointSubset operator()(const PointSubset& a) const;

  /// Backing map of a lazily evaluated operator.
  const std::optional<PointClosureMap>& source_map() const noexcept { return map_; }

 private:
  ClosureOperator(UniversePtr universe, std::vector<Mask> table, std::optional<PointClosureMap> map)
      : universe_(std::move(universe)), table_(std::move(table)), map_(std::move(map)) {}

  UniversePtr universe_;
  std::vector<Mask> table_;
  std::optional<PointClosureMap> map_;
};

/// Kuratowski axioms: cl(∅) = ∅, A ⊆ cl(A), cl(cl(A)) = cl(A),
/// cl(A ∪ B) = cl(A) ∪ cl(B). Requires a tabulated operator.
ValidationReport check_kuratowski(const ClosureOperator& op);

/// Opens are the complements of the fixed points of `op`.
/// Throws ErrorCode::Invalid for a non-Kuratowski operator.
FiniteTopology topology_from_operator(const ClosureOperator& op);

/// The unique Alexandroff T0 topology whose point closures are the images of `m`.
/// Throws ErrorCode::Invalid for an invalid map.
FiniteTopology synthesize_alexandroff(const PointClosureMap& m);

/// Message naming the first violation of an invalid map.
std::string describe_invalid_map(const PointClosureMap& m, const ValidationReport& report);

}  // namespace alexq
