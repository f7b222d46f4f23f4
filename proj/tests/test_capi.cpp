#include <doctest.h>

#include <memory>
#include <string>

#include "alexq/alexq.h"

namespace {

constexpr const char* kChainMap = R"({"points":["a","b","c"],"closure":{"a":["a"],"b":["a","b"],"c":["a","b","c"]}})";
constexpr const char* kChainOpens = R"({"points":["a","b","c"],"opens":[[],["c"],["b","c"],["a","b","c"]]})";
constexpr const char* kIndiscrete = R"({"points":["a","b"],"opens":[[],["a","b"]]})";

struct Freer {
  void operator()(alexq_topology* p) const { alexq_topology_free(p); }
  void operator()(alexq_closure_map* p) const { alexq_closure_map_free(p); }
  void operator()(alexq_qmetric* p) const { alexq_qmetric_free(p); }
  void operator()(alexq_report* p) const { alexq_report_free(p); }
  void operator()(alexq_certificate* p) const { alexq_certificate_free(p); }
  void operator()(char* p) const { alexq_string_free(p); }
};
template <class T>
using Owned = std::unique_ptr<T, Freer>;

template <class T>
Owned<T> adopt(T* p) {
  return Owned<T>(p);
}

std::string take(char* text) {
  Owned<char> owned(text);
  return text ? std::string(text) : std::string();
}

Owned<alexq_topology> topology(const char* json) {
  alexq_topology* t = nullptr;
  REQUIRE(alexq_topology_from_json(json, &t) == ALEXQ_OK);
  return adopt(t);
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(alexq_version()) == "1.0.0");
  CHECK(std::string(alexq_status_name(ALEXQ_OK)) == "ok");
  CHECK(std::string(alexq_status_name(ALEXQ_ERROR_PRECONDITION)) == "precondition failed");
  alexq_string_free(nullptr);
}

TEST_CASE("document detection") {
  alexq_document_kind kind{};
  CHECK(alexq_detect_document(kChainMap, &kind) == ALEXQ_OK);
  CHECK(kind == ALEXQ_DOCUMENT_CLOSURE_MAP);
  CHECK(alexq_detect_document(kChainOpens, &kind) == ALEXQ_OK);
  CHECK(kind == ALEXQ_DOCUMENT_TOPOLOGY);
  CHECK(alexq_detect_document("not json", &kind) == ALEXQ_ERROR_PARSE);
  CHECK(std::string(alexq_last_error()).starts_with("malformed JSON"));
  CHECK(alexq_detect_document(nullptr, &kind) == ALEXQ_ERROR_ARGUMENT);
}

TEST_CASE("topology handle") {
  auto t = topology(kChainOpens);
  size_t n = 0, opens = 0;
  CHECK(alexq_topology_point_count(t.get(), &n) == ALEXQ_OK);
  CHECK(n == 3);
  const char* label = nullptr;
  CHECK(alexq_topology_label(t.get(), 2, &label) == ALEXQ_OK);
  CHECK(std::string(label) == "c");
  CHECK(alexq_topology_label(t.get(), 3, &label) == ALEXQ_ERROR_RANGE);
  CHECK(alexq_topology_open_count(t.get(), &opens) == ALEXQ_OK);
  CHECK(opens == 4);
  uint64_t word = 0;
  CHECK(alexq_topology_open(t.get(), 1, &word) == ALEXQ_OK);
  CHECK(word == 4);
  CHECK(alexq_topology_closure(t.get(), 2, &word) == ALEXQ_OK);
  CHECK(word == 3);
  CHECK(alexq_topology_closure(t.get(), 8, &word) == ALEXQ_ERROR_RANGE);
  CHECK(alexq_topology_point_closure(t.get(), 2, &word) == ALEXQ_OK);
  CHECK(word == 7);
  int flag = -1;
  CHECK(alexq_topology_is_t0(t.get(), &flag) == ALEXQ_OK);
  CHECK(flag == 1);
  CHECK(alexq_topology_is_t0_separation(t.get(), &flag) == ALEXQ_OK);
  CHECK(flag == 1);
  char* json = nullptr;
  CHECK(alexq_topology_to_json(t.get(), &json) == ALEXQ_OK);
  CHECK(take(json) == kChainOpens);

  alexq_topology* bad = nullptr;
  CHECK(alexq_topology_from_json(R"({"points":["a","b"],"opens":[["a"]]})", &bad) == ALEXQ_ERROR_INVALID);
  CHECK(bad == nullptr);
  CHECK(alexq_topology_from_json(R"({"points":["a","a"],"opens":[]})", &bad) == ALEXQ_ERROR_PARSE);
  CHECK(std::string(alexq_last_error()) == "points[1]: duplicate label \"a\"");
}

TEST_CASE("order and comparisons") {
  auto t = topology(kChainOpens);
  uint64_t rows[3] = {};
  CHECK(alexq_topology_order(t.get(), 1, rows, 3) == ALEXQ_OK);
  CHECK(rows[0] == 2);
  CHECK(rows[1] == 4);
  CHECK(rows[2] == 0);
  CHECK(alexq_topology_order(t.get(), 0, rows, 3) == ALEXQ_OK);
  CHECK(rows[0] == 6);
  CHECK(alexq_topology_order(t.get(), 0, rows, 2) == ALEXQ_ERROR_ARGUMENT);

  auto indiscrete = topology(kIndiscrete);
  uint64_t two[2] = {};
  CHECK(alexq_topology_order(indiscrete.get(), 1, two, 2) == ALEXQ_ERROR_PRECONDITION);

  auto discrete = topology(R"({"points":["a","b","c"],"opens":[[],["a"],["b"],["c"],["a","b"],["a","c"],["b","c"],["a","b","c"]]})");
  int flag = -1;
  CHECK(alexq_topology_is_finer(discrete.get(), t.get(), &flag) == ALEXQ_OK);
  CHECK(flag == 1);
  CHECK(alexq_topology_is_finer(t.get(), discrete.get(), &flag) == ALEXQ_OK);
  CHECK(flag == 0);
  CHECK(alexq_topology_equivalent(t.get(), t.get(), &flag) == ALEXQ_OK);
  CHECK(flag == 1);
  CHECK(alexq_topology_equal(t.get(), discrete.get(), &flag) == ALEXQ_OK);
  CHECK(flag == 0);
  CHECK(alexq_topology_equal(t.get(), indiscrete.get(), &flag) == ALEXQ_OK);
  CHECK(flag == 0);
  CHECK(alexq_topology_is_finer(t.get(), indiscrete.get(), &flag) == ALEXQ_ERROR_UNIVERSE_MISMATCH);
}

TEST_CASE("family check") {
  alexq_report* raw = nullptr;
  CHECK(alexq_family_check_json(R"({"points":["a","b"],"opens":[["a"],["b"]]})", &raw) == ALEXQ_OK);
  auto report = adopt(raw);
  int valid = 1;
  CHECK(alexq_report_valid(report.get(), &valid) == ALEXQ_OK);
  CHECK(valid == 0);
  size_t count = 0;
  CHECK(alexq_report_violation_count(report.get(), &count) == ALEXQ_OK);
  CHECK(count >= 2);
  char* text = nullptr;
  CHECK(alexq_report_violation_text(report.get(), 0, &text) == ALEXQ_OK);
  CHECK(take(text) == "MissingEmptySet");
}

TEST_CASE("closure map handle") {
  alexq_closure_map* raw = nullptr;
  REQUIRE(alexq_closure_map_from_json(kChainMap, &raw) == ALEXQ_OK);
  auto m = adopt(raw);
  alexq_report* rep = nullptr;
  CHECK(alexq_closure_map_validate(m.get(), &rep) == ALEXQ_OK);
  auto report = adopt(rep);
  char* json = nullptr;
  CHECK(alexq_report_to_json(report.get(), &json) == ALEXQ_OK);
  CHECK(take(json) == R"({"valid":true,"violations":[]})");

  uint64_t word = 0;
  CHECK(alexq_closure_map_extend(m.get(), 4, &word) == ALEXQ_OK);
  CHECK(word == 7);
  CHECK(alexq_closure_map_extend(m.get(), 0, &word) == ALEXQ_OK);
  CHECK(word == 0);

  alexq_topology* synth = nullptr;
  CHECK(alexq_closure_map_synthesize(m.get(), &synth) == ALEXQ_OK);
  auto t = adopt(synth);
  CHECK(alexq_topology_to_json(t.get(), &json) == ALEXQ_OK);
  CHECK(take(json) == kChainOpens);

  alexq_closure_map* back = nullptr;
  CHECK(alexq_closure_map_of_topology(t.get(), &back) == ALEXQ_OK);
  auto round = adopt(back);
  CHECK(alexq_closure_map_to_json(round.get(), &json) == ALEXQ_OK);
  CHECK(take(json) == kChainMap);

  REQUIRE(alexq_closure_map_from_json(R"({"points":["a","b","c"],"closure":{"a":["a"],"b":["a","b"],"c":["b","c"]}})",
                                      &raw) == ALEXQ_OK);
  auto broken = adopt(raw);
  CHECK(alexq_closure_map_validate(broken.get(), &rep) == ALEXQ_OK);
  auto broken_report = adopt(rep);
  char* text = nullptr;
  CHECK(alexq_report_violation_text(broken_report.get(), 0, &text) == ALEXQ_OK);
  CHECK(take(text) == "NotHereditary(c, b)");
  CHECK(alexq_report_violation_text(broken_report.get(), 1, &text) == ALEXQ_ERROR_RANGE);
  CHECK(alexq_closure_map_synthesize(broken.get(), &synth) == ALEXQ_ERROR_INVALID);
  CHECK(alexq_closure_map_extend(broken.get(), 1, &word) == ALEXQ_ERROR_INVALID);
}

TEST_CASE("quasi-metric handle") {
  auto t = topology(kChainOpens);
  alexq_qmetric* raw = nullptr;
  CHECK(alexq_qmetric_from_topology(t.get(), "3/2", &raw) == ALEXQ_OK);
  auto d = adopt(raw);
  char* json = nullptr;
  CHECK(alexq_qmetric_to_json(d.get(), &json) == ALEXQ_OK);
  CHECK(take(json) == R"({"points":["a","b","c"],"dist":[["0","0","0"],["3/2","0","0"],["3/2","3/2","0"]]})");

  char* entry = nullptr;
  CHECK(alexq_qmetric_entry(d.get(), 2, 0, &entry) == ALEXQ_OK);
  CHECK(take(entry) == "3/2");
  int eq = 0;
  char* tval = nullptr;
  CHECK(alexq_qmetric_equidistant(d.get(), &eq, &tval) == ALEXQ_OK);
  CHECK(eq == 1);
  CHECK(take(tval) == "3/2");

  uint64_t ball = 0;
  CHECK(alexq_qmetric_open_ball(d.get(), 1, "1", &ball) == ALEXQ_OK);
  CHECK(ball == 6);
  CHECK(alexq_qmetric_open_ball(d.get(), 1, "0", &ball) == ALEXQ_ERROR_ARGUMENT);
  CHECK(alexq_qmetric_open_ball(d.get(), 1, "x", &ball) == ALEXQ_ERROR_ARGUMENT);

  alexq_topology* balls = nullptr;
  CHECK(alexq_qmetric_ball_topology(d.get(), &balls) == ALEXQ_OK);
  auto bt = adopt(balls);
  int same = 0;
  CHECK(alexq_topology_equal(bt.get(), t.get(), &same) == ALEXQ_OK);
  CHECK(same == 1);

  uint64_t cl = 0;
  CHECK(alexq_qmetric_closure(d.get(), 4, &cl) == ALEXQ_OK);
  CHECK(cl == 7);
  CHECK(alexq_qmetric_closure(d.get(), 0, &cl) == ALEXQ_ERROR_ARGUMENT);

  alexq_qmetric* sym = nullptr;
  CHECK(alexq_qmetric_symmetrize(d.get(), &sym) == ALEXQ_OK);
  auto s = adopt(sym);
  CHECK(alexq_qmetric_to_json(s.get(), &json) == ALEXQ_OK);
  CHECK(take(json) == R"({"points":["a","b","c"],"dist":[["0","3/2","3/2"],["3/2","0","3/2"],["3/2","3/2","0"]]})");

  auto indiscrete = topology(kIndiscrete);
  CHECK(alexq_qmetric_from_topology(indiscrete.get(), nullptr, &raw) == ALEXQ_ERROR_PRECONDITION);
  CHECK(std::string(alexq_last_error()) == "input topology is not T0");

  REQUIRE(alexq_qmetric_from_json(R"({"points":["a","b"],"dist":[["0","0"],["0","0"]]})", &raw) == ALEXQ_OK);
  auto flat = adopt(raw);
  CHECK(alexq_qmetric_equidistant(flat.get(), &eq, &tval) == ALEXQ_OK);
  CHECK(eq == 1);
  CHECK(tval == nullptr);
  alexq_report* rep = nullptr;
  CHECK(alexq_qmetric_validate(flat.get(), &rep) == ALEXQ_OK);
  auto report = adopt(rep);
  CHECK(alexq_report_to_json(report.get(), &json) == ALEXQ_OK);
  CHECK(take(json) == R"({"valid":false,"violations":[{"kind":"NotSeparated","points":["a","b"]}]})");
  CHECK(alexq_qmetric_ball_topology(flat.get(), &balls) == ALEXQ_ERROR_INVALID);
}

TEST_CASE("oracle entry points") {
  alexq_census c{};
  CHECK(alexq_census_run(3, 0, &c) == ALEXQ_OK);
  CHECK(c.topologies == 29);
  CHECK(c.t0_topologies == 19);
  CHECK(c.valid_closure_maps == 19);
  char* json = nullptr;
  CHECK(alexq_census_to_json(&c, 0, &json) == ALEXQ_OK);
  CHECK(take(json) == R"({"n":3,"total_families":256,"topologies":29,"t0_topologies":19,"valid_closure_maps":19})");
  CHECK(alexq_census_run(5, 0, &c) == ALEXQ_ERROR_RANGE);

  CHECK(alexq_theorem_count() == 6);
  CHECK(std::string(alexq_theorem_id(0)) == "T3.1");
  CHECK(alexq_theorem_id(6) == nullptr);

  alexq_certificate* raw = nullptr;
  CHECK(alexq_verify("P2.1", 3, 0, &raw) == ALEXQ_OK);
  auto cert = adopt(raw);
  int passed = 0;
  CHECK(alexq_certificate_passed(cert.get(), &passed) == ALEXQ_OK);
  CHECK(passed == 1);
  CHECK(alexq_certificate_to_json(cert.get(), 0, &json) == ALEXQ_OK);
  CHECK(take(json) == R"({"theorem":"P2.1","n":3,"instances_checked":29,"passed":true,"counterexample":null})");
  CHECK(alexq_verify("X1.0", 3, 0, &raw) == ALEXQ_ERROR_ARGUMENT);
}
