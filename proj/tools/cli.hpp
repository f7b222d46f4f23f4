#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace alexq_cli {

enum class Command { Validate, Synthesize, QMetric, Balls, Hasse, Enumerate, Verify };
enum class Format { Json, Text, Dot };

struct CliConfig {
  Command command = Command::Validate;
  std::string input = "-";
  std::optional<Format> format;        // defaults: dot for hasse, json otherwise
  std::optional<std::string> constant;  // qmetric only
  std::optional<std::size_t> n;         // enumerate and verify only
  std::optional<std::string> theorem;   // verify only; all theorems when absent
  bool allow_slow = false;
  bool timing = true;
  bool full_relation = false;  // hasse only
};

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Exit codes: 0 ok, 1 malformed input or usage, 2 well-formed but invalid, 3 precondition.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMalformed = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitPrecondition = 3;

bool needs_input(Command command);

/// Either a config to run, or the final result (help text, usage error).
std::variant<CliConfig, CliResult> parse_args(int argc, const char* const* argv);

CliResult run(const CliConfig& config, std::string_view input);

}  // namespace alexq_cli
