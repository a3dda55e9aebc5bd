#pragma once

#include <string>
#include <vector>

namespace lderiv::cli {

struct RunResult {
  int exit_code = 0;
  std::string report;  // stdout
  std::string error;   // stderr
};

// args excludes the program name. Exit 0 on success, 2 on validation or
// usage errors, 1 on computation errors.
RunResult run(const std::vector<std::string>& args);

}  // namespace lderiv::cli
