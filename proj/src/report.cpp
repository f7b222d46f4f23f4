#include "alexq/report.hpp"

namespace alexq {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NotInjective: return "NotInjective";
    case ViolationKind::NotExtensive: return "NotExtensive";
    case ViolationKind::NotHereditary: return "NotHereditary";
    case ViolationKind::EmptyClosureNonempty: return "EmptyClosureNonempty";
    case ViolationKind::ClosureNotExtensive: return "ClosureNotExtensive";
    case ViolationKind::ClosureNotIdempotent: return "ClosureNotIdempotent";
    case ViolationKind::ClosureNotAdditive: return "ClosureNotAdditive";
    case ViolationKind::NonzeroDiagonal: return "NonzeroDiagonal";
    case ViolationKind::TriangleInequality: return "TriangleInequality";
    case ViolationKind::NotSeparated: return "NotSeparated";
    case ViolationKind::MissingEmptySet: return "MissingEmptySet";
    case ViolationKind::MissingCarrier: return "MissingCarrier";
    case ViolationKind::NotUnionClosed: return "NotUnionClosed";
    case ViolationKind::NotIntersectionClosed: return "NotIntersectionClosed";
  }
  return "Unknown";
}

std::string ValidationReport::summary(const PointUniverse& universe) const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += to_string(v.kind);
    if (v.points.empty() && v.subsets.empty()) continue;
    out += '(';
    bool first = true;
    for (std::size_t p : v.points) {
      if (!first) out += ", ";
      out += universe.label(p);
      first = false;
    }
    for (Mask s : v.subsets) {
      if (!first) out += ", ";
      out += '{';
      bool inner = true;
      for (std::size_t p : members_of(s)) {
        if (!inner) out += ", ";
        out += universe.label(p);
        inner = false;
      }
      out += '}';
      first = false;
    }
    out += ')';
  }
  return out;
}

}  // namespace alexq
