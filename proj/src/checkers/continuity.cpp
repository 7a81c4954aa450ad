#include "probes.hpp"
#include "relab/checkers/checkers.hpp"

namespace relab {

namespace {

Verdict probe_all(const ComparisonOracle& oracle, const Domain& domain, const CheckConfig& cfg, const Hints& hints,
                  bool axes_only) {
  cfg.validate();
  if (!oracle.has_float()) return Verdict::inapplicable("oracle has no Float64 comparison");
  if (!domain.convex()) return Verdict::inapplicable("domain is not convex");
  try {
    SamplePool pool = build_pool(domain, cfg, hints);
    std::vector<Point> dirs = direction_bundle(domain.dimension(), cfg, hints, axes_only);
    for (const Point& limit : pool.limits) {
      for (const Point& d : dirs) {
        std::vector<Point> seq = approach_sequence(limit, d, cfg.resolution, cfg.refine_depth);
        bool inside = true;
        for (const Point& p : seq) inside = inside && domain.contains(p);
        if (!inside) continue;
        if (auto w = closure_counterexample(oracle, limit, seq, pool.points)) {
          w->points.emplace_back("direction", d);
          w->params.emplace_back("step", cfg.resolution);
          return Verdict::violated(std::move(*w), cfg.resolution);
        }
      }
    }
  } catch (const IncomparableFound& e) {
    return incomparable_verdict(e, cfg.resolution);
  }
  return Verdict::holds(cfg.resolution);
}

}  // namespace

Verdict check_continuity(const ComparisonOracle& oracle, const Domain& domain, const CheckConfig& cfg,
                         const Hints& hints) {
  return probe_all(oracle, domain, cfg, hints, false);
}

Verdict check_separate_continuity(const ComparisonOracle& oracle, const Domain& domain, const CheckConfig& cfg,
                                  const Hints& hints) {
  return probe_all(oracle, domain, cfg, hints, true);
}

}  // namespace relab
