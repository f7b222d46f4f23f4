#include "alexq/universe.hpp"

#include <algorithm>
#include <unordered_set>

#include "alexq/error.hpp"

namespace alexq {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::Schema: return "schema violation";
    case ErrorCode::Invalid: return "invalid input";
    case ErrorCode::Precondition: return "precondition failed";
    case ErrorCode::Argument: return "bad argument";
    case ErrorCode::OutOfRange: return "out of range";
    case ErrorCode::UniverseMismatch: return "universe mismatch";
  }
  return "unknown error";
}

std::vector<std::size_t> members_of(Mask m) {
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(std::popcount(m)));
  while (m != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

PointUniverse::PointUniverse(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > kMaxPoints) {
    throw Error(ErrorCode::OutOfRange,
                "carrier has " + std::to_string(labels_.size()) + " points; at most 64 are supported");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) {
      throw Error(ErrorCode::Argument, "duplicate point label \"" + l + "\"");
    }
  }
}

std::shared_ptr<const PointUniverse> PointUniverse::indexed(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return make(std::move(labels));
}

std::shared_ptr<const PointUniverse> PointUniverse::make(std::vector<std::string> labels) {
  return std::make_shared<const PointUniverse>(std::move(labels));
}

const std::string& PointUniverse::label(std::size_t i) const {
  if (i >= labels_.size()) {
    throw Error(ErrorCode::OutOfRange, "point index " + std::to_string(i) + " out of range");
  }
  return labels_[i];
}

std::optional<std::size_t> PointUniverse::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_universe(const UniversePtr& a, const UniversePtr& b) {
  if (!same_universe(a, b)) {
    throw Error(ErrorCode::UniverseMismatch, "operands are defined on different carriers");
  }
}

PointSubset::PointSubset(UniversePtr universe, Mask members)
    : universe_(std::move(universe)), bits_(members) {
  if (!universe_) throw Error(ErrorCode::Argument, "subset without a universe");
  if (!is_subset(bits_, universe_->full())) {
    throw Error(ErrorCode::OutOfRange, "subset references points outside the carrier");
  }
}

PointSubset PointSubset::full(UniversePtr universe) {
  Mask all = universe->full();
  return {std::move(universe), all};
}

PointSubset PointSubset::of(UniversePtr universe, std::initializer_list<std::size_t> points) {
  Mask m = 0;
  for (auto p : points) {
    if (p >= kMaxPoints) throw Error(ErrorCode::OutOfRange, "point index out of range");
    m |= Mask{1} << p;
  }
  return {std::move(universe), m};
}

bool PointSubset::contains(std::size_t point) const {
  if (point >= universe_->size()) {
    throw Error(ErrorCode::OutOfRange, "point index " + std::to_string(point) + " out of range");
  }
  return has_point(bits_, point);
}

bool PointSubset::subset_of(const PointSubset& other) const {
  require_same_universe(universe_, other.universe_);
  return is_subset(bits_, other.bits_);
}

PointSubset PointSubset::complement() const { return {universe_, universe_->full() & ~bits_}; }

PointSubset PointSubset::operator|(const PointSubset& other) const {
  require_same_universe(universe_, other.universe_);
  return {universe_, bits_ | other.bits_};
}

PointSubset PointSubset::operator&(const PointSubset& other) const {
  require_same_universe(universe_, other.universe_);
  return {universe_, bits_ & other.bits_};
}

bool PointSubset::operator==(const PointSubset& other) const {
  return bits_ == other.bits_ && same_universe(universe_, other.universe_);
}

}  // namespace alexq
