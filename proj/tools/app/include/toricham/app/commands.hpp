#pragma once

#include "toricham/app/selftest.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace toricham::app {

enum ExitCode : int { Success = 0, InputError = 1, ValidationFailure = 2 };

struct ComputeOptions {
  std::vector<std::size_t> loop_indices;  // 1-based
  std::vector<std::string> loop_weights;  // "c1,...,cm"
  bool all = false;
  std::optional<std::string> json_path;   // "-" writes JSON to out
};

int run_compute(const std::string& path, const ComputeOptions& options, std::ostream& out, std::ostream& err);

int run_selftest(std::ostream& out, const SelftestOptions& options = {});

int run_oracle_blowup(const std::string& tau, const std::string& mu, std::ostream& out, std::ostream& err);
int run_oracle_cpn(const std::string& n, const std::string& tau, std::ostream& out, std::ostream& err);

/// Full command line dispatch; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace toricham::app
