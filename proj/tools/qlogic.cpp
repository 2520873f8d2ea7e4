#include <iostream>

#include "qlogic/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = qlogic::run_command(args);
  std::cout << result.human;
  std::cerr << result.diagnostics;
  return result.exit_code;
}
