#include "alexq/topology.hpp"

#include <algorithm>

#include "alexq/error.hpp"

namespace alexq {

SetFamily::SetFamily(UniversePtr universe, std::vector<Mask> sets)
    : universe_(std::move(universe)), sets_(std::move(sets)) {
  if (!universe_) throw Error(ErrorCode::Argument, "set family without a universe");
  const Mask carrier = universe_->full();
  for (Mask s : sets_) {
    if (!is_subset(s, carrier)) {
      throw Error(ErrorCode::OutOfRange, "family member references points outside the carrier");
    }
  }
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool SetFamily::contains(Mask set) const {
  return std::binary_search(sets_.begin(), sets_.end(), set);
}

bool SetFamily::operator==(const SetFamily& other) const {
  return sets_ == other.sets_ && same_universe(universe_, other.universe_);
}

bool is_topology(std::span<const Mask> sets, Mask carrier) {
  auto has = [&](Mask s) { return std::binary_search(sets.begin(), sets.end(), s); };
  if (!has(0) || !has(carrier)) return false;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!has(sets[i] | sets[j]) || !has(sets[i] & sets[j])) return false;
    }
  }
  return true;
}

bool is_topology(const SetFamily& family) {
  return is_topology(family.sets(), family.universe()->full());
}

FiniteTopology::FiniteTopology(SetFamily opens) : opens_(std::move(opens)) {
  if (!is_topology(opens_)) {
    throw Error(ErrorCode::Invalid, "family is not a topology");
  }
}

FiniteTopology make_topology_unchecked(SetFamily opens) {
  return FiniteTopology(std::move(opens), FiniteTopology::Unchecked{});
}

FiniteTopology FiniteTopology::discrete(UniversePtr universe) {
  const std::size_t n = universe->size();
  if (n > 20) throw Error(ErrorCode::OutOfRange, "discrete topology too large to list");
  std::vector<Mask> all(std::size_t{1} << n);
  for (std::size_t s = 0; s < all.size(); ++s) all[s] = s;
  return make_topology_unchecked(SetFamily(std::move(universe), std::move(all)));
}

FiniteTopology FiniteTopology::indiscrete(UniversePtr universe) {
  Mask carrier = universe->full();
  return make_topology_unchecked(SetFamily(std::move(universe), {0, carrier}));
}

bool FiniteTopology::is_closed(Mask set) const {
  return is_open(universe()->full() & ~set);
}

Mask closure(const FiniteTopology& topo, Mask a) {
  const Mask carrier = topo.universe()->full();
  Mask result = carrier;
  for (Mask open : topo.opens().sets()) {
    if ((open & a) == 0) result &= carrier & ~open;
  }
  return result;
}

PointSubset closure(const FiniteTopology& topo, const PointSubset& a) {
  require_same_universe(topo.universe(), a.universe());
  return {topo.universe(), closure(topo, a.bits())};
}

PointSubset point_closure(const FiniteTopology& topo, std::size_t x) {
  if (x >= topo.size()) {
    throw Error(ErrorCode::OutOfRange, "point index " + std::to_string(x) + " out of range");
  }
  return {topo.universe(), closure(topo, Mask{1} << x)};
}

std::vector<Mask> point_closures(const FiniteTopology& topo) {
  std::vector<Mask> out(topo.size());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = closure(topo, Mask{1} << x);
  return out;
}

bool is_t0_separation(const FiniteTopology& topo) {
  const std::size_t n = topo.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      bool split = std::any_of(topo.opens().sets().begin(), topo.opens().sets().end(),
                               [&](Mask o) { return has_point(o, x) != has_point(o, y); });
      if (!split) return false;
    }
  }
  return true;
}

bool is_t0_closures(const FiniteTopology& topo) {
  auto closures = point_closures(topo);
  std::sort(closures.begin(), closures.end());
  return std::adjacent_find(closures.begin(), closures.end()) == closures.end();
}

bool alexandroff_closure_identity(const FiniteTopology& topo, const PointSubset& a) {
  require_same_universe(topo.universe(), a.universe());
  if (a.is_empty()) {
    throw Error(ErrorCode::Argument, "closure identity is stated for nonempty subsets");
  }
  Mask pointwise = 0;
  for (std::size_t x : a.members()) pointwise |= closure(topo, Mask{1} << x);
  return closure(topo, a.bits()) == pointwise;
}

bool Relation::is_reflexive() const {
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    if (!holds(x, x)) return false;
  }
  return true;
}

bool Relation::is_transitive() const {
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    for (std::size_t y : members_of(rows_[x])) {
      if (!is_subset(rows_[y], rows_[x])) return false;
    }
  }
  return true;
}

bool Relation::is_antisymmetric() const {
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    for (std::size_t y : members_of(rows_[x])) {
      if (y != x && holds(y, x)) return false;
    }
  }
  return true;
}

Relation specialization_order(const FiniteTopology& topo) {
  const auto closures = point_closures(topo);
  Relation order(topo.size());
  for (std::size_t y = 0; y < closures.size(); ++y) {
    for (std::size_t x : members_of(closures[y])) order.set(x, y);
  }
  return order;
}

Relation strict_part(const Relation& order) {
  std::vector<Mask> rows = order.rows();
  for (std::size_t x = 0; x < rows.size(); ++x) rows[x] &= ~(Mask{1} << x);
  return Relation(std::move(rows));
}

Relation covering_relation(const Relation& order) {
  const Relation strict = strict_part(order);
  Relation cover(order.size());
  for (std::size_t x = 0; x < strict.size(); ++x) {
    for (std::size_t y : members_of(strict.row(x))) {
      bool between = false;
      for (std::size_t z : members_of(strict.row(x))) {
        if (z != y && strict.holds(z, y)) {
          between = true;
          break;
        }
      }
      if (!between) cover.set(x, y);
    }
  }
  return cover;
}

bool is_finer(const FiniteTopology& candidate, const FiniteTopology& base) {
  require_same_universe(candidate.universe(), base.universe());
  const auto& opens = base.opens().sets();
  return std::all_of(opens.begin(), opens.end(), [&](Mask o) { return candidate.is_open(o); });
}

bool closures_equivalent(const FiniteTopology& t1, const FiniteTopology& t2) {
  require_same_universe(t1.universe(), t2.universe());
  return point_closures(t1) == point_closures(t2);
}

}  // namespace alexq
