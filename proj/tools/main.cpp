#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "cli.hpp"

namespace {

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) return false;
  std::ostringstream buffer;
  buffer << file.rdbuf();
  out = buffer.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  auto parsed = alexq_cli::parse_args(argc, argv);
  if (auto* done = std::get_if<alexq_cli::CliResult>(&parsed)) {
    std::cout << done->out;
    std::cerr << done->err;
    return done->exit_code;
  }
  const auto& config = std::get<alexq_cli::CliConfig>(parsed);
  std::string input;
  if (alexq_cli::needs_input(config.command) && !read_input(config.input, input)) {
    std::cerr << "alexq: cannot read input file \"" << config.input << "\"\n";
    return alexq_cli::kExitMalformed;
  }
  const auto result = alexq_cli::run(config, input);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
