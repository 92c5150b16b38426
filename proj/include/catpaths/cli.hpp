#ifndef CATPATHS_CLI_HPP
#define CATPATHS_CLI_HPP

#include <string>
#include <vector>

#include "catpaths/io.hpp"

namespace catpaths {

struct RunConfig {
  double tol = 1e-9;
  int horizon = 6;
  std::size_t max_zm = 100000;
  std::size_t bound_f = 2, bound_k = 2, bound_h = 4;
  std::string out; // empty means stdout
};

struct CliResult {
  int exit_code = 0;
  Json report;
};

// Exit codes: 0 all-pass/success, 1 relation failure, 2 bad input.
CliResult dispatch(const std::vector<std::string> &args);

int run_cli(int argc, char **argv);

} // namespace catpaths

#endif
