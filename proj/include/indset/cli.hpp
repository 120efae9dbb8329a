#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace indset::cli {

// Effective configuration echoed into every JSON result for provenance.
struct RunConfig {
  uint64_t seed = 0;
  unsigned threads = 0;  // 0 = hardware concurrency, resolved at parse time
  std::string format = "json";
  double c_mix = 2.0;
  double c_loop = 3.0;
  double c_samples = 1.0;
  double c_anneal = 0.5;
  double c_reduction = 1.0;
  uint32_t exact_limit = 40;
  uint32_t ising_exact_limit = 22;
  uint64_t degree_cap = 500000;
  double time_budget_s = 0.0;  // 0 = unlimited
  uint64_t n_samples_override = 0;
};

// Runs one subcommand. Returns the process exit code:
// 0 success, 2 usage, 3 precondition violation, 4 resource refusal,
// 1 internal inconsistency. Errors are emitted as JSON on err.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

int run_main(int argc, char** argv);

}  // namespace indset::cli
