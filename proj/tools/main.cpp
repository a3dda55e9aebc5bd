#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = lderiv::cli::run(args);
  std::cout << result.report;
  std::cerr << result.error;
  return result.exit_code;
}
