#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace honkit::cli {

enum ExitCode : int { kOk = 0, kUsageError = 1, kDataError = 2 };

/// Effective settings of one invocation. Precedence: flags, then HONKIT_*
/// environment variables, then these defaults.
struct RunConfig {
  int max_order = 5;
  double epsilon = 0.05;
  double damping = 0.85;
  double pagerank_tol = 1e-12;
  double kl_epsilon = 1e-10;
  double split_fraction = 0.2;
  std::uint64_t seed = 42;
  std::size_t exact_sp_threshold = 20000;
  std::string format;  // json|csv; empty until the command resolves its default
};

/// Runs one command (`args` excludes the program name). Reports go to `out`
/// or the --output file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace honkit::cli
