#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace alexq {

/// Membership word of a subset: bit i set iff point i is a member.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxPoints = 64;

inline constexpr Mask full_mask(std::size_t n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline constexpr bool has_point(Mask a, std::size_t i) { return ((a >> i) & 1U) != 0; }

/// Point indices of a mask in ascending order.
std::vector<std::size_t> members_of(Mask m);

/// A labeled finite carrier. Point i is labels()[i]; the order is fixed at
/// construction and is the iteration order of every algorithm.
class PointUniverse {
 public:
  explicit PointUniverse(std::vector<std::string> labels);

  /// Universe labeled "0", "1", ..., "n-1".
  static std::shared_ptr<const PointUniverse> indexed(std::size_t n);
  static std::shared_ptr<const PointUniverse> make(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;
  Mask full() const noexcept { return full_mask(labels_.size()); }

  bool operator==(const PointUniverse& other) const = default;

 private:
  std::vector<std::string> labels_;
};

using UniversePtr = std::shared_ptr<const PointUniverse>;

bool same_universe(const UniversePtr& a, const UniversePtr& b);

/// Throws ErrorCode::UniverseMismatch unless both carriers are equal.
void require_same_universe(const UniversePtr& a, const UniversePtr& b);

/// An element of 2^X. Equality is extensional.
class PointSubset {
 public:
  PointSubset(UniversePtr universe, Mask members);
  static PointSubset empty(UniversePtr universe) { return {std::move(universe), 0}; }
  static PointSubset full(UniversePtr universe);
  static PointSubset of(UniversePtr universe, std::initializer_list<std::size_t> points);

  const UniversePtr& universe() const noexcept { return universe_; }
  Mask bits() const noexcept { return bits_; }

  bool contains(std::size_t point) const;
  bool is_empty() const noexcept { return bits_ == 0; }
  std::size_t count() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  std::vector<std::size_t> members() const { return members_of(bits_); }
  bool subset_of(const PointSubset& other) const;

  PointSubset complement() const;
  PointSubset operator|(const PointSubset& other) const;
  PointSubset operator&(const PointSubset& other) const;

  bool operator==(const PointSubset& other) const;

 private:
  UniversePtr universe_;
  Mask bits_;
};

}  // namespace alexq
