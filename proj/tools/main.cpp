#include "cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  casimir::cli::RunConfig config;
  if (const auto code = casimir::cli::parse_command_line(argc, argv, config, std::cout, std::cerr)) {
    return *code;
  }
  return casimir::cli::run(config, std::cout, std::cerr);
}
