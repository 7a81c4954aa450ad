#pragma once

#include "relab/checkers/config.hpp"
#include "relab/checkers/verdict.hpp"
#include "relab/core/fixture.hpp"
#include "relab/core/profile.hpp"
#include "relab/harness/edges.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace relab {

struct BatteryReport {
  std::string fixture;
  AssumptionProfile profile;
  // Axiom keys plus per-coordinate "restricted_solvability@i".
  std::map<std::string, Verdict> verdicts;
  std::map<std::string, Verdict> basic;
  // Checker exceptions, keyed like verdicts; the verdict is then Inapplicable.
  std::map<std::string, std::string> errors;
  double resolution = 0.0;
  std::uint64_t seed = 0;
  std::optional<double> timing_ms;
};

// Deterministic given cfg. An empty axiom list runs all of them; stronger RS runs only when the
// fixture names a coordinate set.
BatteryReport run_battery(const Fixture& fixture, const CheckConfig& cfg, bool timing = false,
                          const std::vector<Axiom>& axioms = {});

}  // namespace relab
