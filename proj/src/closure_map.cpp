#include "alexq/closure_map.hpp"

#include <algorithm>
#include <unordered_set>

#include "alexq/error.hpp"

namespace alexq {

namespace {

Mask extend_unchecked(std::span<const Mask> images, Mask a) {
  Mask out = 0;
  for (std::size_t x : members_of(a)) out |= images[x];
  return out;
}

void require_valid(const PointClosureMap& m) {
  auto report = validate_closure_map(m);
  if (!report.valid()) throw Error(ErrorCode::Invalid, describe_invalid_map(m, report));
}

// Closed sets of the extension of a valid map are exactly the unions of images.
std::vector<Mask> closed_sets_of_valid_map(const PointClosureMap& m) {
  constexpr std::size_t kMaxClosedSets = std::size_t{1} << 20;
  std::unordered_set<Mask> seen{0};
  std::vector<Mask> frontier{0};
  while (!frontier.empty()) {
    Mask c = frontier.back();
    frontier.pop_back();
    for (Mask image : m.images()) {
      Mask next = c | image;
      if (seen.insert(next).second) {
        if (seen.size() > kMaxClosedSets) {
          throw Error(ErrorCode::OutOfRange, "topology has too many open sets to list");
        }
        frontier.push_back(next);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

PointClosureMap::PointClosureMap(UniversePtr universe, std::vector<Mask> images)
    : universe_(std::move(universe)), images_(std::move(images)) {
  if (!universe_) throw Error(ErrorCode::Argument, "closure map without a universe");
  if (images_.size() != universe_->size()) {
    throw Error(ErrorCode::Argument, "closure map needs exactly one image per point");
  }
  for (Mask image : images_) {
    if (!is_subset(image, universe_->full())) {
      throw Error(ErrorCode::OutOfRange, "closure image references points outside the carrier");
    }
  }
}

PointClosureMap PointClosureMap::of_topology(const FiniteTopology& topo) {
  return {topo.universe(), point_closures(topo)};
}

PointSubset PointClosureMap::image(std::size_t x) const {
  if (x >= images_.size()) {
    throw Error(ErrorCode::OutOfRange, "point index " + std::to_string(x) + " out of range");
  }
  return {universe_, images_[x]};
}

bool PointClosureMap::operator==(const PointClosureMap& other) const {
  return images_ == other.images_ && same_universe(universe_, other.universe_);
}

ValidationReport validate_closure_map(const PointClosureMap& m) {
  ValidationReport report;
  const auto& img = m.images();
  const std::size_t n = img.size();

  [&] {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        if (img[x] == img[y]) {
          report.violations.push_back({ViolationKind::NotInjective, {x, y}, {}});
          return;
        }
      }
    }
  }();

  for (std::size_t x = 0; x < n; ++x) {
    if (!has_point(img[x], x)) {
      report.violations.push_back({ViolationKind::NotExtensive, {x}, {}});
      break;
    }
  }

  [&] {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y : members_of(img[x])) {
        if (!is_subset(img[y], img[x])) {
          report.violations.push_back({ViolationKind::NotHereditary, {x, y}, {}});
          return;
        }
      }
    }
  }();
  return report;
}

std::string describe_invalid_map(const PointClosureMap& m, const ValidationReport& report) {
  return "closure map is invalid: " + report.summary(*m.universe());
}

PointSubset extend_closure(const PointClosureMap& m, const PointSubset& a) {
  require_same_universe(m.universe(), a.universe());
  require_valid(m);
  if (a.is_empty()) return a;
  return {m.universe(), extend_unchecked(m.images(), a.bits())};
}

ClosureOperator ClosureOperator::tabulate(UniversePtr universe, const std::function<Mask(Mask)>& fn) {
  const std::size_t n = universe->size();
  if (n > kMaxTabulatedPoints) {
    throw Error(ErrorCode::OutOfRange, "closure operators are tabulated for at most 16 points");
  }
  const Mask carrier = universe->full();
  std::vector<Mask> table(std::size_t{1} << n);
  for (std::size_t a = 0; a < table.size(); ++a) {
    table[a] = fn(a);
    if (!is_subset(table[a], carrier)) {
      throw Error(ErrorCode::OutOfRange, "closure value references points outside the carrier");
    }
  }
  return ClosureOperator(std::move(universe), std::move(table), std::nullopt);
}

ClosureOperator ClosureOperator::from_map(const PointClosureMap& m) {
  require_valid(m);
  std::vector<Mask> table;
  if (m.size() <= kMaxTabulatedPoints) {
    table.resize(std::size_t{1} << m.size());
    for (std::size_t a = 0; a < table.size(); ++a) table[a] = extend_unchecked(m.images(), a);
  }
  return ClosureOperator(m.universe(), std::move(table), m);
}

Mask ClosureOperator::apply(Mask a) const {
  if (!is_subset(a, universe_->full())) {
    throw Error(ErrorCode::OutOfRange, "subset references points outside the carrier");
  }
  if (tabulated()) return table_[a];
  return extend_unchecked(map_->images(), a);
}

PointSubset ClosureOperator::operator()(const PointSubset& a) const {
  require_same_universe(universe_, a.universe());
  return {universe_, apply(a.bits())};
}

ValidationReport check_kuratowski(const ClosureOperator& op) {
  if (!op.tabulated()) {
    throw Error(ErrorCode::OutOfRange, "Kuratowski check needs a tabulated operator (at most 16 points)");
  }
  ValidationReport report;
  const std::size_t count = std::size_t{1} << op.universe()->size();

  if (op.apply(0) != 0) report.violations.push_back({ViolationKind::EmptyClosureNonempty, {}, {0}});

  for (Mask a = 0; a < count; ++a) {
    if (!is_subset(a, op.apply(a))) {
      report.violations.push_back({ViolationKind::ClosureNotExtensive, {}, {a}});
      break;
    }
  }
  for (Mask a = 0; a < count; ++a) {
    if (op.apply(op.apply(a)) != op.apply(a)) {
      report.violations.push_back({ViolationKind::ClosureNotIdempotent, {}, {a}});
      break;
    }
  }
  [&] {
    for (Mask a = 0; a < count; ++a) {
      for (Mask b = a + 1; b < count; ++b) {
        if (op.apply(a | b) != (op.apply(a) | op.apply(b))) {
          report.violations.push_back({ViolationKind::ClosureNotAdditive, {}, {a, b}});
          return;
        }
      }
    }
  }();
  return report;
}

FiniteTopology topology_from_operator(const ClosureOperator& op) {
  const auto& universe = op.universe();
  const Mask carrier = universe->full();
  std::vector<Mask> closed;
  if (op.source_map()) {
    // The extension of a valid map satisfies the axioms; the oracle checks that claim.
    require_valid(*op.source_map());
    if (op.tabulated()) {
      for (Mask a = 0; a <= carrier; ++a) {
        if (op.apply(a) == a) closed.push_back(a);
      }
    } else {
      closed = closed_sets_of_valid_map(*op.source_map());
    }
  } else {
    auto report = check_kuratowski(op);
    if (!report.valid()) {
      throw Error(ErrorCode::Invalid, "operator is not a Kuratowski closure: " + report.summary(*universe));
    }
    for (Mask a = 0; a <= carrier; ++a) {
      if (op.apply(a) == a) closed.push_back(a);
    }
  }
  std::vector<Mask> opens;
  opens.reserve(closed.size());
  for (Mask c : closed) opens.push_back(carrier & ~c);
  return make_topology_unchecked(SetFamily(universe, std::move(opens)));
}

FiniteTopology synthesize_alexandroff(const PointClosureMap& m) {
  return topology_from_operator(ClosureOperator::from_map(m));
}

}  // namespace alexq
