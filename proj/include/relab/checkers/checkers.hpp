#pragma once

#include "relab/checkers/config.hpp"
#include "relab/checkers/verdict.hpp"
#include "relab/checkers/witness.hpp"
#include "relab/core/domain.hpp"
#include "relab/core/fixture.hpp"
#include "relab/core/oracle.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace relab {

enum class Side { Upper, Lower };

// Sequence p_k = limit + resolution 2^-k direction. Witness when every p_k is on `side` of x
// while the limit is strictly on the other side.
std::optional<Witness> section_closure_probe(const ComparisonOracle& oracle, const Domain& domain, const Point& x,
                                             const Point& limit, const Point& direction, Side side,
                                             const CheckConfig& cfg);

// Strict section {y > x} (Upper) or {y < x} (Lower) is not open at limit: limit is in it but
// no p_k is.
std::optional<Witness> section_openness_probe(const ComparisonOracle& oracle, const Domain& domain, const Point& x,
                                              const Point& limit, const Point& direction, Side side,
                                              const CheckConfig& cfg);

// Keys: complete, transitive, weakly_monotone, order_dense, convex_upper.
std::map<std::string, Verdict> check_basic(const ComparisonOracle& oracle, const Domain& domain,
                                           const CheckConfig& cfg, const Hints& hints = {});

Verdict check_completeness(const ComparisonOracle& oracle, const Domain& domain, const CheckConfig& cfg,
                           const Hints& hints = {});
Verdict check_transitivity(const ComparisonOracle& oracle, const Domain& domain, const CheckConfig& cfg,
                           const Hints& hints = {});
Verdict check_weak_monotonicity(const ComparisonOracle& oracle, const Domain& domain, const CheckConfig& cfg,
                                const Hints& hints = {});
Verdict check_order_density(const ComparisonOracle& oracle, const Domain& domain, const CheckConfig& cfg,
                            const Hints& hints = {});
Verdict check_convex_upper(const ComparisonOracle& oracle, const Domain& domain, const CheckConfig& cfg,
                           const Hints& hints = {});

Verdict check_continuity(const ComparisonOracle& oracle, const Domain& domain, const CheckConfig& cfg,
                         const Hints& hints = {});
Verdict check_separate_continuity(const ComparisonOracle& oracle, const Domain& domain, const CheckConfig& cfg,
                                  const Hints& hints = {});
Verdict check_mixture_continuity(const ComparisonOracle& oracle, const Domain& domain, const CheckConfig& cfg,
                                 const Hints& hints = {});
Verdict check_archimedean(const ComparisonOracle& oracle, const Domain& domain, const CheckConfig& cfg,
                          const Hints& hints = {});
Verdict check_weak_wold(const ComparisonOracle& oracle, const Domain& domain, const CheckConfig& cfg,
                        const Hints& hints = {});

// Arc m : [0,1] -> domain joining x (t = 0) to y (t = 1).
struct Curve {
  std::string id;
  std::function<Point(double)> at;
  // Supplied arcs must stay in the domain; generated ones are dropped when they leave it.
  bool required = false;
};

using CurveFamily = std::function<std::vector<Curve>(const Point& x, const Point& y, std::uint64_t seed)>;

// Straight segment, two quadratic arcs through seeded control points, two axis staircases.
CurveFamily default_curve_family(const Domain& domain);

Verdict check_wold(const ComparisonOracle& oracle, const Domain& domain, const CurveFamily& curves,
                   const CheckConfig& cfg, const Hints& hints = {});
Verdict check_wold(const ComparisonOracle& oracle, const Domain& domain, const CheckConfig& cfg,
                   const Hints& hints = {});

// Coordinates are 0-based in the API.
Verdict check_restricted_solvability(const ComparisonOracle& oracle, const Domain& domain, const CheckConfig& cfg,
                                     const Hints& hints = {});
std::vector<Verdict> restricted_solvability_by_coordinate(const ComparisonOracle& oracle, const Domain& domain,
                                                          const CheckConfig& cfg, const Hints& hints = {});
Verdict check_unrestricted_solvability(const ComparisonOracle& oracle, const Domain& domain,
                                       const CheckConfig& cfg, const Hints& hints = {});
Verdict check_stronger_rs(const ComparisonOracle& oracle, const Domain& domain, const std::vector<int>& coords,
                          const CheckConfig& cfg, const Hints& hints = {});

// One restricted-solvability trial on the line {base with coords set to c}, c in [lo, hi].
struct LineTrial {
  bool vacuous = true;
  bool solved = false;
  std::optional<Witness> gap;
  // Oracle calls spent in the tolerance phase of the first bisection.
  int bisection_calls = 0;
};

LineTrial restricted_line_trial(const ComparisonOracle& oracle, const Domain& domain, const Point& x,
                                const std::vector<int>& coords, const Point& base, const CheckConfig& cfg,
                                const std::vector<Point>& separators = {});

LineTrial restricted_line_trial_exact(const ComparisonOracle& oracle, const Domain& domain, const ExactPoint& x,
                                      const std::vector<int>& coords, const ExactPoint& base);

}  // namespace relab
