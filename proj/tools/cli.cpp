#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <memory>
#include <sstream>
#include <vector>

#include "alexq/alexq.h"

namespace alexq_cli {

namespace {

// Carries an exit code and a one-line diagnostic out of a command.
struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_of(alexq_status status) {
  switch (status) {
    case ALEXQ_ERROR_INVALID: return kExitInvalid;
    case ALEXQ_ERROR_PRECONDITION: return kExitPrecondition;
    default: return kExitMalformed;
  }
}

void check(alexq_status status) {
  if (status != ALEXQ_OK) throw Failure{exit_code_of(status), alexq_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Topology = std::unique_ptr<alexq_topology, Deleter<alexq_topology, alexq_topology_free>>;
using ClosureMap = std::unique_ptr<alexq_closure_map, Deleter<alexq_closure_map, alexq_closure_map_free>>;
using QMetric = std::unique_ptr<alexq_qmetric, Deleter<alexq_qmetric, alexq_qmetric_free>>;
using Report = std::unique_ptr<alexq_report, Deleter<alexq_report, alexq_report_free>>;
using Certificate = std::unique_ptr<alexq_certificate, Deleter<alexq_certificate, alexq_certificate_free>>;

std::string take(char* text) {
  std::string out = text != nullptr ? text : "";
  alexq_string_free(text);
  return out;
}

const char* command_name(Command command) {
  switch (command) {
    case Command::Validate: return "validate";
    case Command::Synthesize: return "synthesize";
    case Command::QMetric: return "qmetric";
    case Command::Balls: return "balls";
    case Command::Hasse: return "hasse";
    case Command::Enumerate: return "enumerate";
    case Command::Verify: return "verify";
  }
  return "?";
}

alexq_document_kind detect(const std::string& input) {
  alexq_document_kind kind{};
  check(alexq_detect_document(input.c_str(), &kind));
  return kind;
}

Topology load_topology(const std::string& input) {
  alexq_topology* topo = nullptr;
  check(alexq_topology_from_json(input.c_str(), &topo));
  return Topology(topo);
}

ClosureMap load_closure_map(const std::string& input) {
  alexq_closure_map* map = nullptr;
  check(alexq_closure_map_from_json(input.c_str(), &map));
  return ClosureMap(map);
}

QMetric load_qmetric(const std::string& input) {
  alexq_qmetric* d = nullptr;
  check(alexq_qmetric_from_json(input.c_str(), &d));
  return QMetric(d);
}

Topology synthesize(const alexq_closure_map* map) {
  alexq_topology* topo = nullptr;
  check(alexq_closure_map_synthesize(map, &topo));
  return Topology(topo);
}

// Topology documents load directly; closure maps are synthesized first.
Topology topology_or_map(const std::string& input) {
  switch (detect(input)) {
    case ALEXQ_DOCUMENT_TOPOLOGY: return load_topology(input);
    case ALEXQ_DOCUMENT_CLOSURE_MAP: return synthesize(load_closure_map(input).get());
    case ALEXQ_DOCUMENT_QUASI_METRIC: break;
  }
  throw Failure{kExitMalformed, "document: expected a topology or a closure map"};
}

std::vector<std::string> topology_labels(const alexq_topology* topo) {
  std::size_t n = 0;
  check(alexq_topology_point_count(topo, &n));
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    const char* label = nullptr;
    check(alexq_topology_label(topo, i, &label));
    labels[i] = label;
  }
  return labels;
}

std::string braces(const std::vector<std::string>& labels, std::uint64_t set) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (((set >> i) & 1U) == 0) continue;
    if (!first) out += ", ";
    out += labels[i];
    first = false;
  }
  return out + "}";
}

std::string render_topology(const alexq_topology* topo, Format format) {
  if (format == Format::Json) {
    char* json = nullptr;
    check(alexq_topology_to_json(topo, &json));
    return take(json) + "\n";
  }
  const auto labels = topology_labels(topo);
  std::ostringstream out;
  out << "points:";
  for (const auto& l : labels) out << ' ' << l;
  out << "\nopens:\n";
  std::size_t count = 0;
  check(alexq_topology_open_count(topo, &count));
  for (std::size_t k = 0; k < count; ++k) {
    std::uint64_t set = 0;
    check(alexq_topology_open(topo, k, &set));
    out << "  " << braces(labels, set) << '\n';
  }
  return out.str();
}

std::string render_report(const alexq_report* report, Format format) {
  if (format == Format::Json) {
    char* json = nullptr;
    check(alexq_report_to_json(report, &json));
    return take(json) + "\n";
  }
  int valid = 0;
  std::size_t count = 0;
  check(alexq_report_valid(report, &valid));
  check(alexq_report_violation_count(report, &count));
  std::string out = valid != 0 ? "valid\n" : "invalid\n";
  for (std::size_t i = 0; i < count; ++i) {
    char* text = nullptr;
    check(alexq_report_violation_text(report, i, &text));
    out += "  " + take(text) + "\n";
  }
  return out;
}

std::string render_qmetric(const alexq_qmetric* d, Format format) {
  if (format == Format::Json) {
    char* json = nullptr;
    check(alexq_qmetric_to_json(d, &json));
    return take(json) + "\n";
  }
  std::size_t n = 0;
  check(alexq_qmetric_point_count(d, &n));
  std::vector<std::vector<std::string>> cells(n + 1, std::vector<std::string>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    const char* label = nullptr;
    check(alexq_qmetric_label(d, i, &label));
    cells[0][i + 1] = label;
    cells[i + 1][0] = label;
    for (std::size_t j = 0; j < n; ++j) {
      char* entry = nullptr;
      check(alexq_qmetric_entry(d, i, j, &entry));
      cells[i + 1][j + 1] = take(entry);
    }
  }
  std::size_t width = 1;
  for (const auto& row : cells) {
    for (const auto& c : row) width = std::max(width, c.size());
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      std::ostringstream cell;
      cell << std::left << std::setw(static_cast<int>(width)) << row[j];
      line += (j == 0 ? "" : "  ") + cell.str();
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

std::string dot_quote(const std::string& label) {
  std::string out = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string render_order(const alexq_topology* topo, bool full_relation, Format format) {
  const auto labels = topology_labels(topo);
  std::vector<std::uint64_t> rows(labels.size());
  check(alexq_topology_order(topo, full_relation ? 0 : 1, rows.data(), rows.size()));

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t x = 0; x < rows.size(); ++x) {
    for (std::size_t y = 0; y < rows.size(); ++y) {
      if (((rows[x] >> y) & 1U) != 0) edges.emplace_back(x, y);
    }
  }

  std::ostringstream out;
  switch (format) {
    case Format::Dot:
      out << "digraph " << (full_relation ? "specialization" : "hasse") << " {\n";
      for (const auto& l : labels) out << "  " << dot_quote(l) << ";\n";
      for (auto [x, y] : edges) out << "  " << dot_quote(labels[x]) << " -> " << dot_quote(labels[y]) << ";\n";
      out << "}\n";
      break;
    case Format::Json: {
      nlohmann::ordered_json doc;
      doc["points"] = labels;
      doc["edges"] = nlohmann::ordered_json::array();
      for (auto [x, y] : edges) doc["edges"].push_back({labels[x], labels[y]});
      out << doc.dump() << '\n';
      break;
    }
    case Format::Text:
      for (auto [x, y] : edges) out << labels[x] << " -> " << labels[y] << '\n';
      break;
  }
  return out.str();
}

std::string cmd_validate(const std::string& input, Format format, int& exit_code) {
  alexq_report* raw = nullptr;
  switch (detect(input)) {
    case ALEXQ_DOCUMENT_CLOSURE_MAP:
      check(alexq_closure_map_validate(load_closure_map(input).get(), &raw));
      break;
    case ALEXQ_DOCUMENT_QUASI_METRIC:
      check(alexq_qmetric_validate(load_qmetric(input).get(), &raw));
      break;
    case ALEXQ_DOCUMENT_TOPOLOGY:
      check(alexq_family_check_json(input.c_str(), &raw));
      break;
  }
  Report report(raw);
  int valid = 0;
  check(alexq_report_valid(report.get(), &valid));
  exit_code = valid != 0 ? kExitOk : kExitInvalid;
  return render_report(report.get(), format);
}

std::string cmd_synthesize(const std::string& input, Format format) {
  if (detect(input) != ALEXQ_DOCUMENT_CLOSURE_MAP) {
    throw Failure{kExitMalformed, "document: synthesize expects a closure map"};
  }
  return render_topology(synthesize(load_closure_map(input).get()).get(), format);
}

std::string cmd_qmetric(const std::string& input, const CliConfig& config, Format format) {
  const Topology topo = topology_or_map(input);
  alexq_qmetric* raw = nullptr;
  check(alexq_qmetric_from_topology(topo.get(), config.constant ? config.constant->c_str() : nullptr, &raw));
  return render_qmetric(QMetric(raw).get(), format);
}

std::string cmd_balls(const std::string& input, Format format) {
  if (detect(input) != ALEXQ_DOCUMENT_QUASI_METRIC) {
    throw Failure{kExitMalformed, "document: balls expects a quasi-metric"};
  }
  const QMetric d = load_qmetric(input);
  alexq_topology* topo = nullptr;
  check(alexq_qmetric_ball_topology(d.get(), &topo));
  return render_topology(Topology(topo).get(), format);
}

std::string cmd_enumerate(const CliConfig& config, Format format) {
  alexq_census census{};
  check(alexq_census_run(*config.n, config.allow_slow ? 1 : 0, &census));
  if (format == Format::Json) {
    char* json = nullptr;
    check(alexq_census_to_json(&census, config.timing ? 1 : 0, &json));
    return take(json) + "\n";
  }
  std::ostringstream out;
  out << std::left << std::setw(4) << "n" << std::setw(14) << "families" << std::setw(12) << "topologies"
      << std::setw(8) << "t0" << "valid_maps";
  if (config.timing) out << "  elapsed_s";
  out << '\n'
      << std::setw(4) << census.n << std::setw(14) << census.total_families << std::setw(12) << census.topologies
      << std::setw(8) << census.t0_topologies << std::setw(10) << census.valid_closure_maps;
  if (config.timing) out << "  " << std::fixed << std::setprecision(3) << census.elapsed_seconds;
  out << '\n';
  std::string text = out.str();
  // Trailing padding from the last column is not part of the table.
  std::string trimmed;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    trimmed += line + "\n";
  }
  return trimmed;
}

std::string cmd_verify(const CliConfig& config, Format format, int& exit_code) {
  std::vector<std::string> ids;
  if (config.theorem) {
    ids.push_back(*config.theorem);
  } else {
    for (std::size_t i = 0; i < alexq_theorem_count(); ++i) ids.emplace_back(alexq_theorem_id(i));
  }
  std::string out;
  exit_code = kExitOk;
  for (const auto& id : ids) {
    alexq_certificate* raw = nullptr;
    check(alexq_verify(id.c_str(), *config.n, config.allow_slow ? 1 : 0, &raw));
    Certificate cert(raw);
    int passed = 0;
    check(alexq_certificate_passed(cert.get(), &passed));
    if (passed == 0) exit_code = kExitInvalid;
    char* json = nullptr;
    check(alexq_certificate_to_json(cert.get(), config.timing ? 1 : 0, &json));
    std::string line = take(json);
    if (format == Format::Json) {
      out += line + "\n";
      continue;
    }
    const auto doc = nlohmann::json::parse(line);
    std::ostringstream text;
    text << std::left << std::setw(6) << id << "n=" << *config.n << "  instances="
         << doc["instances_checked"].get<std::uint64_t>() << "  " << (passed != 0 ? "passed" : "FAILED");
    if (config.timing) text << "  " << std::fixed << std::setprecision(3) << doc["elapsed_seconds"].get<double>() << "s";
    text << '\n';
    if (passed == 0) text << "  counterexample: " << doc["counterexample"].dump() << '\n';
    out += text.str();
  }
  return out;
}

void check_config(const CliConfig& config, Format format) {
  const char* name = command_name(config.command);
  auto usage = [&](const std::string& message) { throw Failure{kExitMalformed, message}; };
  if (format == Format::Dot && config.command != Command::Hasse) usage(std::string("--format dot is only valid for hasse, not ") + name);
  if (config.constant && config.command != Command::QMetric) usage(std::string("--t is only accepted by qmetric, not ") + name);
  const bool oracle = config.command == Command::Enumerate || config.command == Command::Verify;
  if (oracle && !config.n) usage(std::string("--n is required by ") + name);
  if (!oracle && config.n) usage(std::string("--n is only accepted by enumerate and verify, not ") + name);
  if (config.full_relation && config.command != Command::Hasse) usage("--full-relation is only valid for hasse");
  if (config.theorem && config.command != Command::Verify) usage("--theorem is only valid for verify");
}

}  // namespace

bool needs_input(Command command) { return command != Command::Enumerate && command != Command::Verify; }

CliResult run(const CliConfig& config, std::string_view input_view) {
  CliResult result;
  const std::string input(input_view);
  try {
    const Format format = config.format.value_or(config.command == Command::Hasse ? Format::Dot : Format::Json);
    check_config(config, format);
    switch (config.command) {
      case Command::Validate: result.out = cmd_validate(input, format, result.exit_code); break;
      case Command::Synthesize: result.out = cmd_synthesize(input, format); break;
      case Command::QMetric: result.out = cmd_qmetric(input, config, format); break;
      case Command::Balls: result.out = cmd_balls(input, format); break;
      case Command::Hasse: result.out = render_order(topology_or_map(input).get(), config.full_relation, format); break;
      case Command::Enumerate: result.out = cmd_enumerate(config, format); break;
      case Command::Verify: result.out = cmd_verify(config, format, result.exit_code); break;
    }
  } catch (const Failure& f) {
    result.exit_code = f.exit_code;
    result.out.clear();
    result.err = "alexq: " + f.message + "\n";
  }
  return result;
}

std::variant<CliConfig, CliResult> parse_args(int argc, const char* const* argv) {
  CLI::App app{"Finite T0-Alexandroff topologies, closure maps and equidistant quasi-metrics", "alexq"};
  app.require_subcommand(1);

  CliConfig config;
  std::string format;

  const std::vector<std::string> formats{"json", "text", "dot"};
  auto add_common = [&](CLI::App* sub, bool takes_input) {
    if (takes_input) sub->add_option("input", config.input, "Input JSON file, or - for standard input");
    sub->add_option("-f,--format", format, "Output format: json, text or dot")->check(CLI::IsMember(formats));
  };

  auto* validate = app.add_subcommand("validate", "Validate a closure map, quasi-metric or candidate topology");
  auto* synth = app.add_subcommand("synthesize", "Alexandroff T0 topology of a closure map");
  auto* qmetric = app.add_subcommand("qmetric", "Equidistant quasi-metric of a T0 topology or closure map");
  auto* balls = app.add_subcommand("balls", "Open-ball topology of a quasi-metric");
  auto* hasse = app.add_subcommand("hasse", "Covering relation of the specialization order as DOT");
  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive census of topologies and closure maps");
  auto* verify = app.add_subcommand("verify", "Exhaustive theorem checks with certificates");

  for (auto* sub : {validate, synth, qmetric, balls, hasse}) add_common(sub, true);
  for (auto* sub : {enumerate, verify}) {
    add_common(sub, false);
    sub->add_option("-n,--n", config.n, "Carrier size")->required();
    sub->add_flag("--allow-slow", config.allow_slow, "Permit n = 5 (scans 2^32 families)");
    sub->add_flag("!--no-timing", config.timing, "Omit elapsed time from the output");
  }
  qmetric->add_option("-t,--t", config.constant, "Nonzero distance, a positive rational (default 1)");
  hasse->add_flag("--full-relation", config.full_relation, "Emit every strict pair instead of covering pairs");
  verify->add_option("--theorem", config.theorem, "One of T3.1, T3.4, P2.1, P2.3, C3.4, E3.5 (default: all)");

  std::ostringstream out;
  std::ostringstream err;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return CliResult{code == 0 ? kExitOk : kExitMalformed, out.str(), err.str()};
  }

  const std::pair<CLI::App*, Command> table[] = {
      {validate, Command::Validate}, {synth, Command::Synthesize}, {qmetric, Command::QMetric},
      {balls, Command::Balls},       {hasse, Command::Hasse},      {enumerate, Command::Enumerate},
      {verify, Command::Verify},
  };
  for (auto [sub, command] : table) {
    if (sub->parsed()) config.command = command;
  }
  if (format == "json") config.format = Format::Json;
  if (format == "text") config.format = Format::Text;
  if (format == "dot") config.format = Format::Dot;
  return config;
}

}  // namespace alexq_cli
