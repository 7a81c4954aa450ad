#pragma once

#include <cstdint>

namespace relab {

struct CheckConfig {
  double resolution = 1e-3;
  int refine_depth = 40;
  double bisect_tol = 1e-12;
  int bisect_max_iter = 200;
  // Trials per checker: limits, triples, non-vacuous solvability samples.
  int sample_budget = 256;
  std::uint64_t seed = 0;
  // Cap on lattice points in the shared sampling pool.
  int pool_size = 1200;

  // Throws ConfigError.
  void validate() const;
};

}  // namespace relab
