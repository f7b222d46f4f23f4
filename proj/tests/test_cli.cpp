#include <doctest.h>

#include "cli_goldens.hpp"

using namespace alexq_cli;

namespace {

std::variant<CliConfig, CliResult> parse(std::vector<const char*> args) {
  args.insert(args.begin(), "alexq");
  return parse_args(static_cast<int>(args.size()), args.data());
}

CliConfig parsed_config(std::vector<const char*> args) {
  auto out = parse(std::move(args));
  REQUIRE(std::holds_alternative<CliConfig>(out));
  return std::get<CliConfig>(out);
}

int parse_exit(std::vector<const char*> args) {
  auto out = parse(std::move(args));
  REQUIRE(std::holds_alternative<CliResult>(out));
  return std::get<CliResult>(out).exit_code;
}

CliResult run_command(Command command, std::string_view input) { return run(goldens::config_for(command), input); }

constexpr const char* kIndiscrete = R"({"points":["a","b"],"opens":[[],["a","b"]]})";
constexpr const char* kSierpinskiOpens = R"({"points":["a","b"],"opens":[[],["b"],["a","b"]]})";

}  // namespace

TEST_CASE("golden files") {
  for (const auto& c : goldens::golden_cases()) {
    CAPTURE(c.name);
    CHECK(goldens::check_golden(c) == "");
  }
}

TEST_CASE("pipeline composition") {
  CHECK(goldens::check_pipeline("sierpinski") == "");
  CHECK(goldens::check_pipeline("chain") == "");
}

TEST_CASE("argument parsing") {
  auto c = parsed_config({"qmetric", "-t", "3/2", "in.json"});
  CHECK(c.command == Command::QMetric);
  CHECK(c.input == "in.json");
  CHECK(c.constant == "3/2");

  c = parsed_config({"validate"});
  CHECK(c.input == "-");
  CHECK_FALSE(c.format.has_value());

  c = parsed_config({"enumerate", "-n", "4", "--no-timing", "-f", "text"});
  CHECK(c.n == 4u);
  CHECK_FALSE(c.timing);
  CHECK(c.format == Format::Text);

  c = parsed_config({"verify", "--n", "5", "--allow-slow", "--theorem", "E3.5"});
  CHECK(c.allow_slow);
  CHECK(c.theorem == "E3.5");

  c = parsed_config({"hasse", "--full-relation", "x.json"});
  CHECK(c.full_relation);

  CHECK(parse_exit({}) == kExitMalformed);
  CHECK(parse_exit({"frobnicate"}) == kExitMalformed);
  CHECK(parse_exit({"enumerate"}) == kExitMalformed);
  CHECK(parse_exit({"synthesize", "-t", "2"}) == kExitMalformed);
  CHECK(parse_exit({"validate", "-f", "yaml"}) == kExitMalformed);
  CHECK(parse_exit({"--help"}) == kExitOk);
}

TEST_CASE("config invariants are enforced by run") {
  auto dot = goldens::config_for(Command::Synthesize);
  dot.format = Format::Dot;
  auto r = run(dot, kSierpinskiOpens);
  CHECK(r.exit_code == kExitMalformed);
  CHECK(r.err.find("--format dot") != std::string::npos);

  auto constant = goldens::config_for(Command::Balls);
  constant.constant = "2";
  CHECK(run(constant, "").exit_code == kExitMalformed);

  auto missing_n = goldens::config_for(Command::Enumerate);
  CHECK(run(missing_n, "").exit_code == kExitMalformed);

  auto too_big = goldens::config_for(Command::Enumerate);
  too_big.n = 5;
  r = run(too_big, "");
  CHECK(r.exit_code == kExitMalformed);
  CHECK_FALSE(r.err.empty());

  auto bad_constant = goldens::config_for(Command::QMetric);
  bad_constant.constant = "0";
  CHECK(run(bad_constant, kSierpinskiOpens).exit_code == kExitMalformed);
}

TEST_CASE("exit codes") {
  auto r = run_command(Command::Synthesize, "{not json");
  CHECK(r.exit_code == kExitMalformed);
  CHECK(r.out.empty());
  CHECK(r.err.starts_with("alexq: malformed JSON"));
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);

  r = run_command(Command::Synthesize, R"({"points":["a"],"closure":{"a":["z"]}})");
  CHECK(r.exit_code == kExitMalformed);
  CHECK(r.err == "alexq: closure.a[0]: unknown point \"z\"\n");

  r = run_command(Command::Synthesize, goldens::read_fixture("nonhereditary_map.json"));
  CHECK(r.exit_code == kExitInvalid);

  r = run_command(Command::QMetric, goldens::read_fixture("indiscrete_topology.json"));
  CHECK(r.exit_code == kExitPrecondition);
  CHECK(r.err == "alexq: input topology is not T0\n");

  r = run_command(Command::Hasse, kIndiscrete);
  CHECK(r.exit_code == kExitPrecondition);

  r = run_command(Command::Balls, R"({"points":["a","b"],"dist":[["0","0"],["0","0"]]})");
  CHECK(r.exit_code == kExitInvalid);

  r = run_command(Command::Validate, R"({"points":["a","b"],"opens":[["a"],["b"]]})");
  CHECK(r.exit_code == kExitInvalid);
  CHECK(r.out.starts_with(R"({"valid":false,"violations":[{"kind":"MissingEmptySet")"));

  r = run_command(Command::Validate, kIndiscrete);
  CHECK(r.exit_code == kExitOk);
}

TEST_CASE("qmetric accepts topologies and maps") {
  const auto from_map = run_command(Command::QMetric, goldens::read_fixture("sierpinski_map.json"));
  const auto from_topology = run_command(Command::QMetric, kSierpinskiOpens);
  CHECK(from_map.exit_code == 0);
  CHECK(from_map.out == from_topology.out);

  auto scaled = goldens::config_for(Command::QMetric);
  scaled.constant = "5/2";
  CHECK(run(scaled, kSierpinskiOpens).out == "{\"points\":[\"a\",\"b\"],\"dist\":[[\"0\",\"0\"],[\"5/2\",\"0\"]]}\n");
}

TEST_CASE("hasse variants") {
  auto full = goldens::config_for(Command::Hasse);
  full.full_relation = true;
  const auto r = run(full, goldens::read_fixture("chain_map.json"));
  CHECK(r.out.starts_with("digraph specialization {\n"));
  CHECK(r.out.find("\"a\" -> \"c\";") != std::string::npos);

  auto text = goldens::config_for(Command::Hasse);
  text.format = Format::Text;
  CHECK(run(text, goldens::read_fixture("chain_map.json")).out == "a -> b\nb -> c\n");
}

TEST_CASE("oracle commands") {
  auto e = goldens::config_for(Command::Enumerate);
  e.n = 3;
  e.timing = false;
  CHECK(run(e, "").out == "{\"n\":3,\"total_families\":256,\"topologies\":29,\"t0_topologies\":19,\"valid_closure_maps\":19}\n");

  auto v = goldens::config_for(Command::Verify);
  v.n = 3;
  v.timing = false;
  auto r = run(v, "");
  CHECK(r.exit_code == kExitOk);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
  CHECK(r.out.starts_with(R"({"theorem":"T3.1","n":3,"instances_checked":531,"passed":true,"counterexample":null})"));

  v.theorem = "C3.4";
  CHECK(run(v, "").out == "{\"theorem\":\"C3.4\",\"n\":3,\"instances_checked\":19,\"passed\":true,\"counterexample\":null}\n");
  v.theorem = "Q1.1";
  CHECK(run(v, "").exit_code == kExitMalformed);
}

TEST_CASE("output is deterministic") {
  for (const auto& c : goldens::golden_cases()) {
    const auto input = goldens::read_fixture(c.input);
    CHECK(run_command(c.command, input).out == run_command(c.command, input).out);
  }
}
