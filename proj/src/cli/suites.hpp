#pragma once

#include "cli/run_report.hpp"

#include <cstdint>
#include <string>

namespace qdiv::cli {

struct SuiteOptions {
  int dim = 3;
  std::size_t samples = 0;  // 0: the suite's own default
  std::uint64_t seed = 0;
  double tol = 1e-8;
  double alpha = 2.0;
  std::string map = "conjugations";  // invariance only
};

// Suite names: invariance, lemmas, prop1, prop2-limits, thm4, wigner.
bool is_suite(const std::string& name);

// Runs the suite, recording assertions, results and witnesses in `report`.
// Throws UsageError for options the suite cannot use.
void run_suite(const std::string& name, const SuiteOptions& options, RunReport& report);

}  // namespace qdiv::cli
