#pragma once

#include "relab/checkers/config.hpp"
#include "relab/checkers/verdict.hpp"
#include "relab/core/oracle.hpp"
#include "relab/core/point.hpp"
#include "relab/core/profile.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace relab::seq {

inline constexpr int kDefaultCoordBudget = 64;

// Drops trailing prefix entries equal to the tail.
SeqPoint canonical(SeqPoint p);
// Canonical point; throws UsageError when a coordinate leaves the open box (-10, 10).
SeqPoint make(std::vector<QSqrt2> prefix, QSqrt2 tail);
SeqPoint constant(const QSqrt2& c);
bool in_box(const SeqPoint& p);

QSqrt2 coordinate(const SeqPoint& p, std::size_t i);
SeqPoint with_coordinate(const SeqPoint& p, std::size_t i, const QSqrt2& c);
QSqrt2 inf_utility(const SeqPoint& p);
// lambda * a + (1 - lambda) * b, coordinatewise; throws UsageError for lambda outside [0,1].
SeqPoint mixture(const SeqPoint& a, const SeqPoint& b, const QSqrt2& lambda);

// n twos followed by zeros.
SeqPoint y_n(int n);

// Relation induced by inf_utility.
ComparisonOracle inf_oracle();
AssumptionProfile inf_profile();

using Family = std::function<SeqPoint(int)>;

struct CoordinateReport {
  std::size_t index = 0;
  bool ok = false;
  // First n from which seq(n)_i stays within tol of the limit, up to the horizon.
  std::optional<int> settles_at;
};

struct ConvergenceReport {
  bool converges = true;
  std::vector<CoordinateReport> coordinates;
  std::optional<std::size_t> first_failure;
};

// Checks coordinates i < coord_budget over n = 1..horizon (0 picks 2 * coord_budget + 2).
ConvergenceReport converges_to(const Family& seq, const SeqPoint& limit, int coord_budget = kDefaultCoordBudget,
                               const QSqrt2& tol = QSqrt2(0), int horizon = 0);

struct SeqFixtureReport {
  std::string name;
  AssumptionProfile profile;
  std::map<std::string, Verdict> verdicts;
  std::vector<std::pair<std::string, VerdictKind>> expected;
  ConvergenceReport convergence;
};

// Continuity via the y^n witness, then separate, mixture, Archimedean and restricted solvability
// by exact probing of sampled points.
SeqFixtureReport seq_fixture_checks(const CheckConfig& cfg, int witness_budget = 50,
                                    int coord_budget = kDefaultCoordBudget);

}  // namespace relab::seq
