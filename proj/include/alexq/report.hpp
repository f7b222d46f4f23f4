#pragma once

#include <string>
#include <vector>

#include "alexq/universe.hpp"

namespace alexq {

enum class ViolationKind {
  // point-closure maps
  NotInjective,   // points (x, y), x < y with equal images
  NotExtensive,   // point x with x ∉ cl1(x)
  NotHereditary,  // points (x, y) with y ∈ cl1(x) but cl1(y) ⊄ cl1(x)
  // closure operators
  EmptyClosureNonempty,  // cl(∅) ≠ ∅
  ClosureNotExtensive,   // subset A with A ⊄ cl(A)
  ClosureNotIdempotent,  // subset A with cl(cl(A)) ≠ cl(A)
  ClosureNotAdditive,    // subsets (A, B) with cl(A ∪ B) ≠ cl(A) ∪ cl(B)
  // quasi-metrics
  NonzeroDiagonal,     // point x with d(x, x) ≠ 0
  TriangleInequality,  // points (x, y, z) with d(x, y) > d(x, z) + d(z, y)
  NotSeparated,        // points (x, y), x < y with d(x, y) = d(y, x) = 0
  // candidate topologies
  MissingEmptySet,
  MissingCarrier,
  NotUnionClosed,         // subsets (A, B) whose union is missing
  NotIntersectionClosed,  // subsets (A, B) whose intersection is missing
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<std::size_t> points;
  std::vector<Mask> subsets;

  bool operator==(const Violation&) const = default;
};

/// Certificate for a validation pass: one violation per failed condition,
/// witnessed by the first offender in index order.
struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const noexcept { return violations.empty(); }
  /// Single-line summary such as "NotHereditary(c, b)".
  std::string summary(const PointUniverse& universe) const;
};

}  // namespace alexq
