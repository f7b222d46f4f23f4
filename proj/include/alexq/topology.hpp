#pragma once

#include <span>
#include <vector>

#include "alexq/universe.hpp"

namespace alexq {

/// Deduplicated collection of subsets kept in ascending order of their
/// membership words, so equal families are equal element by element.
class SetFamily {
 public:
  SetFamily(UniversePtr universe, std::vector<Mask> sets);

  const UniversePtr& universe() const noexcept { return universe_; }
  const std::vector<Mask>& sets() const noexcept { return sets_; }
  std::size_t size() const noexcept { return sets_.size(); }
  bool contains(Mask set) const;

  bool operator==(const SetFamily& other) const;

 private:
  UniversePtr universe_;
  std::vector<Mask> sets_;
};

bool is_topology(const SetFamily& family);

/// Word-level topology test: `sets` must be sorted and unique.
bool is_topology(std::span<const Mask> sets, Mask carrier);

/// A family of open sets containing the empty set and the carrier and
/// closed under pairwise union and intersection. On a finite carrier that
/// makes every instance an Alexandroff space.
class FiniteTopology {
 public:
  /// Throws ErrorCode::Invalid unless `opens` satisfies the topology axioms.
  explicit FiniteTopology(SetFamily opens);

  static FiniteTopology discrete(UniversePtr universe);
  static FiniteTopology indiscrete(UniversePtr universe);

  const UniversePtr& universe() const noexcept { return opens_.universe(); }
  const SetFamily& opens() const noexcept { return opens_; }
  std::size_t size() const noexcept { return opens_.universe()->size(); }
  bool is_open(Mask set) const { return opens_.contains(set); }
  bool is_closed(Mask set) const;

  bool operator==(const FiniteTopology& other) const { return opens_ == other.opens_; }

 private:
  struct Unchecked {};
  FiniteTopology(SetFamily opens, Unchecked) : opens_(std::move(opens)) {}
  friend FiniteTopology make_topology_unchecked(SetFamily opens);

  SetFamily opens_;
};

/// For enumeration code that has already run the word-level axiom test.
FiniteTopology make_topology_unchecked(SetFamily opens);

/// Smallest closed set containing `a`: the intersection of all closed supersets.
PointSubset closure(const FiniteTopology& topo, const PointSubset& a);
Mask closure(const FiniteTopology& topo, Mask a);

PointSubset point_closure(const FiniteTopology& topo, std::size_t x);

/// All point closures in index order (the closure fingerprint of a topology).
std::vector<Mask> point_closures(const FiniteTopology& topo);

/// T0 via open sets: every pair of distinct points is split by some open.
bool is_t0_separation(const FiniteTopology& topo);

/// T0 via closures: x -> cl({x}) is injective.
bool is_t0_closures(const FiniteTopology& topo);

/// cl(A) == union of cl({x}) over x in A. Throws ErrorCode::Argument for empty A.
bool alexandroff_closure_identity(const FiniteTopology& topo, const PointSubset& a);

/// Square boolean relation on a carrier; row x holds the y with (x, y) related.
class Relation {
 public:
  explicit Relation(std::size_t n) : rows_(n, 0) {}
  explicit Relation(std::vector<Mask> rows) : rows_(std::move(rows)) {}

  std::size_t size() const noexcept { return rows_.size(); }
  bool holds(std::size_t x, std::size_t y) const { return has_point(rows_.at(x), y); }
  void set(std::size_t x, std::size_t y) { rows_.at(x) |= Mask{1} << y; }
  Mask row(std::size_t x) const { return rows_.at(x); }
  const std::vector<Mask>& rows() const noexcept { return rows_; }

  bool is_reflexive() const;
  bool is_transitive() const;
  bool is_antisymmetric() const;

  bool operator==(const Relation&) const = default;

 private:
  std::vector<Mask> rows_;
};

/// x ⊑ y iff x ∈ cl({y}).
Relation specialization_order(const FiniteTopology& topo);

/// Covering pairs of a partial order: x ⊏ y with nothing strictly between.
/// Reflexive pairs are dropped. Only meaningful for antisymmetric input.
Relation covering_relation(const Relation& order);

/// Drops the reflexive pairs, keeps every other related pair.
Relation strict_part(const Relation& order);

/// True iff every open of `base` is open in `candidate`.
bool is_finer(const FiniteTopology& candidate, const FiniteTopology& base);

/// The ≈ relation: point closures agree at every point.
bool closures_equivalent(const FiniteTopology& t1, const FiniteTopology& t2);

}  // namespace alexq
