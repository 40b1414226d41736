#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "envelope/algebras.hpp"
#include "envelope/report.hpp"

namespace envelope {

struct JobConfig {
  std::string theory = "chevalley";    // hochschild | harrison | chevalley | koszul | ginfty
  std::string direction = "homology";  // homology | cohomology | verify
  int max_weight = 3;
  std::string input;
  std::string module_path;
  std::string output;
  unsigned seed = 0;
  int jobs = 1;
};

// Without a module file: hochschild homology is the bar resolution, harrison homology the
// quotient complex of R alone, chevalley uses the trivial one-dimensional module, and the
// cohomologies and ginfty use the regular module.
BettiReport run(const JobConfig& job, const AlgebraPresentation& a, const std::optional<ModulePresentation>& m);
BettiReport run(const JobConfig& job);

// Seeded property suite over the bundled examples.
BettiReport selftest(unsigned seed, int jobs = 1);

// Parallel width from ENVELOPE_JOBS, 1 when unset or invalid.
int jobs_from_env();

// 0 all checks pass, 2 validation failure, 3 invariant failure, 4 I/O or parse error.
int exit_code_for(const BettiReport& report);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace envelope
