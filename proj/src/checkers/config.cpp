#include "relab/checkers/config.hpp"

#include "relab/checkers/verdict.hpp"
#include "relab/core/errors.hpp"

#include <cmath>

namespace relab {

void CheckConfig::validate() const {
  if (!(resolution > 0.0) || !std::isfinite(resolution) || resolution > 0.5)
    throw ConfigError("resolution must lie in (0, 0.5]");
  if (refine_depth < 8) throw ConfigError("refine_depth must be >= 8");
  if (!(bisect_tol > 0.0)) throw ConfigError("bisect_tol must be > 0");
  if (bisect_max_iter < 1) throw ConfigError("bisect_max_iter must be >= 1");
  if (sample_budget < 1) throw ConfigError("sample_budget must be >= 1");
  if (pool_size < 16) throw ConfigError("pool_size must be >= 16");
}

Verdict Verdict::holds(double resolution) { return Verdict{VerdictKind::Holds, resolution, std::nullopt, ""}; }

Verdict Verdict::violated(Witness w, double resolution) {
  return Verdict{VerdictKind::Violated, resolution, std::move(w), ""};
}

Verdict Verdict::inapplicable(std::string reason) {
  return Verdict{VerdictKind::Inapplicable, 0.0, std::nullopt, std::move(reason)};
}

}  // namespace relab
