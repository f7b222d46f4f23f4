#include <doctest.h>

#include "alexq/error.hpp"
#include "alexq/json_io.hpp"
#include "common.hpp"

using namespace alexq;
using testing::bits;

namespace {

// Returns "<code>|<message>" for a failing call, or "" when nothing throws.
std::string failure(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    const char* code = e.code() == ErrorCode::Parse    ? "parse"
                       : e.code() == ErrorCode::Schema ? "schema"
                       : e.code() == ErrorCode::Invalid ? "invalid"
                                                        : "other";
    return std::string(code) + "|" + e.what();
  }
  return "";
}

constexpr const char* kSierpinski = R"({"points":["a","b"],"opens":[[],["b"],["a","b"]]})";

}  // namespace

TEST_CASE("document kind detection") {
  CHECK(detect_document_kind(kSierpinski) == DocumentKind::Topology);
  CHECK(detect_document_kind(R"({"points":[],"closure":{}})") == DocumentKind::ClosureMap);
  CHECK(detect_document_kind(R"({"points":[],"dist":[]})") == DocumentKind::QuasiMetric);
  CHECK(failure([] { detect_document_kind(R"({"points":[]})"); }).starts_with("schema|document:"));
  CHECK(failure([] { detect_document_kind("{"); }).starts_with("parse|malformed JSON"));
  CHECK(failure([] { detect_document_kind("[1]"); }).starts_with("schema|document:"));
}

TEST_CASE("topology round trip") {
  const auto t = topology_from_json(kSierpinski);
  CHECK(t.universe()->label(0) == "a");
  CHECK(t.opens().sets() == std::vector<Mask>{0, bits({1}), bits({0, 1})});
  CHECK(to_json(t) == kSierpinski);

  const auto shuffled = topology_from_json(R"({"points": ["a", "b"], "opens": [["b", "a"], [], ["b"], ["b"]]})");
  CHECK(to_json(shuffled) == kSierpinski);
}

TEST_CASE("families that are not topologies") {
  const auto f = family_from_json(R"({"points":["a","b"],"opens":[["a"],["b"]]})");
  CHECK(f.size() == 2);
  CHECK_FALSE(is_topology(f));
  CHECK(failure([] { topology_from_json(R"({"points":["a","b"],"opens":[["a"],["b"]]})"); }) ==
        "invalid|opens: family is not a topology");
}

TEST_CASE("schema errors name the field") {
  CHECK(failure([] { topology_from_json(R"({"points":["a","a"],"opens":[]})"); }) ==
        "schema|points[1]: duplicate label \"a\"");
  CHECK(failure([] { topology_from_json(R"({"points":["a"],"opens":[["z"]]})"); }) ==
        "schema|opens[0][0]: unknown point \"z\"");
  CHECK(failure([] { topology_from_json(R"({"opens":[]})"); }) == "schema|points: missing required field");
  CHECK(failure([] { topology_from_json(R"({"points":[],"opens":[],"extra":1})"); }) ==
        "schema|extra: unknown field");
  CHECK(failure([] { topology_from_json(R"({"points":[1],"opens":[]})"); }) ==
        "schema|points[0]: expected a string label");
  CHECK(failure([] { closure_map_from_json(R"({"points":["a","b"],"closure":{"a":["a"]}})"); }) ==
        "schema|closure: missing entry for point \"b\"");
  CHECK(failure([] { closure_map_from_json(R"({"points":["a"],"closure":{"a":["a"],"q":[]}})"); }) ==
        "schema|closure: unknown point \"q\"");
  CHECK(failure([] { quasimetric_from_json(R"({"points":["a","b"],"dist":[["0","1"]]})"); }) ==
        "schema|dist: expected 2 rows");
  CHECK(failure([] { quasimetric_from_json(R"({"points":["a"],"dist":[[0]]})"); }).starts_with("schema|dist[0][0]:"));
  CHECK(failure([] { quasimetric_from_json(R"({"points":["a","b"],"dist":[["0","-1"],["1","0"]]})"); }) ==
        "schema|dist[0][1]: distances must be nonnegative");
  CHECK(failure([] { quasimetric_from_json(R"({"points":["a","b"],"dist":[["0","1/0"],["1","0"]]})"); })
            .starts_with("schema|dist[0][1]:"));
}

TEST_CASE("closure map round trip") {
  const auto m = closure_map_from_json(
      R"({"points": ["a", "b", "c"], "closure": {"c": ["c", "b", "a"], "a": ["a"], "b": ["b", "a"]}})");
  CHECK(m.images() == std::vector<Mask>{bits({0}), bits({0, 1}), bits({0, 1, 2})});
  CHECK(to_json(m) == R"({"points":["a","b","c"],"closure":{"a":["a"],"b":["a","b"],"c":["a","b","c"]}})");
  CHECK(to_json(closure_map_from_json(to_json(m))) == to_json(m));
}

TEST_CASE("quasi-metric round trip") {
  const auto d = quasimetric_from_json(R"({"points":["x","y"],"dist":[["0","6/4"],["2","0"]]})");
  CHECK(d(0, 1) == Rational(3, 2));
  CHECK(to_json(d) == R"({"points":["x","y"],"dist":[["0","3/2"],["2","0"]]})");
  CHECK(to_json(quasimetric_from_json(to_json(d))) == to_json(d));
}

TEST_CASE("report serialization") {
  const auto u = PointUniverse::make({"a", "b", "c"});
  ValidationReport ok;
  CHECK(to_json(ok, *u) == R"({"valid":true,"violations":[]})");
  ValidationReport bad;
  bad.violations.push_back({ViolationKind::NotHereditary, {2, 1}, {}});
  bad.violations.push_back({ViolationKind::ClosureNotAdditive, {}, {bits({0}), bits({1, 2})}});
  CHECK(to_json(bad, *u) ==
        R"({"valid":false,"violations":[{"kind":"NotHereditary","points":["c","b"]},)"
        R"({"kind":"ClosureNotAdditive","points":[],"subsets":[["a"],["b","c"]]}]})");
  CHECK(bad.summary(*u) == "NotHereditary(c, b); ClosureNotAdditive({a}, {b, c})");
}

TEST_CASE("census and certificate serialization") {
  CensusReport r;
  r.n = 2;
  r.total_families = 16;
  r.topologies = 4;
  r.t0_topologies = 3;
  r.valid_closure_maps = 3;
  CHECK(to_json(r, false) ==
        R"({"n":2,"total_families":16,"topologies":4,"t0_topologies":3,"valid_closure_maps":3})");
  CHECK(to_json(r, true).find("\"elapsed_seconds\":") != std::string::npos);

  TheoremCertificate c;
  c.theorem = TheoremId::T0Equivalence;
  c.n = 3;
  c.instances_checked = 29;
  CHECK(to_json(c, false) == R"({"theorem":"P2.1","n":3,"instances_checked":29,"passed":true,"counterexample":null})");
  c.passed = false;
  c.counterexample = R"({"points":["0"],"opens":[[],["0"]]})";
  CHECK(to_json(c, false) ==
        R"({"theorem":"P2.1","n":3,"instances_checked":29,"passed":false,)"
        R"("counterexample":{"points":["0"],"opens":[[],["0"]]}})");
}

TEST_CASE("labels_of") {
  const auto u = PointUniverse::make({"p", "q", "r"});
  CHECK(labels_of(*u, bits({2, 0})) == std::vector<std::string>{"p", "r"});
  CHECK(labels_of(*u, 0).empty());
}
