#include "probes.hpp"
#include "relab/checkers/checkers.hpp"

#include <cmath>
#include <random>

namespace relab {

namespace {

struct Segment {
  Point x;  // lambda = 1
  Point y;  // lambda = 0
  std::vector<Point> extra_refs;
};

constexpr int kCoarse = 64;

std::optional<Witness> lambda_closure(const ComparisonOracle& oracle, const Segment& s, double limit_lambda,
                                      double step, const CheckConfig& cfg, const std::vector<Point>& refs) {
  if (limit_lambda + step < 0.0 || limit_lambda + step > 1.0) return std::nullopt;
  std::vector<Point> seq;
  for (int k = 0; k <= cfg.refine_depth; ++k) seq.push_back(mixture(s.x, s.y, limit_lambda + std::ldexp(step, -k)));
  Point limit = mixture(s.x, s.y, limit_lambda);
  bool exact_limit = limit_lambda == 0.0 || limit_lambda == 1.0;
  auto w = closure_counterexample(oracle, limit, seq, refs, exact_limit);
  if (w) {
    w->points.emplace_back("segment_x", s.x);
    w->points.emplace_back("segment_y", s.y);
    w->params.emplace_back("lambda", limit_lambda);
    w->params.emplace_back("lambda_step", step);
  }
  return w;
}

std::optional<Witness> endpoint_probe(const ComparisonOracle& oracle, const Segment& s, const CheckConfig& cfg,
                                      const std::vector<Point>& refs) {
  if (auto w = lambda_closure(oracle, s, 0.0, cfg.resolution, cfg, refs)) return w;
  return lambda_closure(oracle, s, 1.0, -cfg.resolution, cfg, refs);
}

// Class boundaries of {lambda : seg(lambda) vs z}, bisected to adjacency and probed from both sides.
std::optional<Witness> boundary_probe(const ComparisonOracle& oracle, const Segment& s, const Point& z,
                                      const CheckConfig& cfg, const std::vector<Point>& refs) {
  auto cls = [&](double lam) { return compare_complete(oracle, mixture(s.x, s.y, lam), z); };
  std::vector<Comparison> coarse(kCoarse + 1);
  for (int j = 0; j <= kCoarse; ++j) coarse[j] = cls(static_cast<double>(j) / kCoarse);
  for (int j = 0; j < kCoarse; ++j) {
    if (coarse[j] == coarse[j + 1]) continue;
    double a = static_cast<double>(j) / kCoarse, b = static_cast<double>(j + 1) / kCoarse;
    const Comparison ca = coarse[j];
    for (int it = 0; it < 200; ++it) {
      double m = a + (b - a) / 2;
      if (m <= a || m >= b) break;
      if (cls(m) == ca) a = m;
      else b = m;
    }
    if (auto w = lambda_closure(oracle, s, a, cfg.resolution, cfg, refs)) return w;
    if (auto w = lambda_closure(oracle, s, b, -cfg.resolution, cfg, refs)) return w;
  }
  return std::nullopt;
}

}  // namespace

Verdict check_mixture_continuity(const ComparisonOracle& oracle, const Domain& domain, const CheckConfig& cfg,
                                 const Hints& hints) {
  cfg.validate();
  if (!oracle.has_float()) return Verdict::inapplicable("oracle has no Float64 comparison");
  if (!domain.convex()) return Verdict::inapplicable("domain is not convex");
  const int n = domain.dimension();
  try {
    SamplePool pool = build_pool(domain, cfg, hints);
    std::vector<Point> dirs = direction_bundle(n, cfg, hints, false);
    std::size_t hint_count = 0;
    for (const Point& h : hints.points)
      if (static_cast<int>(h.size()) == n && domain.contains(h)) ++hint_count;

    std::vector<Segment> segments;
    for (const auto& t : hints.triples) {
      if (static_cast<int>(t[0].size()) != n) continue;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (i != j && t[i] != t[j]) segments.push_back({t[i], t[j], {t[3 - i - j]}});
    }
    auto far_end = [&](const Point& limit, const Point& d) -> std::optional<Point> {
      for (double len = 1.0; len >= 1.0 / 1024; len /= 2) {
        Point p = add_scaled(limit, d, len);
        if (domain.contains(p)) return p;
      }
      return std::nullopt;
    };
    for (std::size_t i = 0; i < pool.limits.size(); ++i) {
      const Point& limit = pool.limits[i];
      std::vector<std::size_t> picks;
      if (i < hint_count) {
        for (std::size_t k = 0; k < dirs.size(); ++k) picks.push_back(k);
      } else {
        picks = {i % dirs.size(), (i + dirs.size() / 2) % dirs.size()};
      }
      for (std::size_t k : picks)
        if (auto far = far_end(limit, dirs[k])) segments.push_back({*far, limit, {}});
    }
    auto rng = checker_rng(cfg, 21);
    std::uniform_int_distribution<std::size_t> any(0, pool.points.size() - 1);
    for (int k = 0; k < cfg.sample_budget / 4; ++k) {
      const Point& a = pool.points[any(rng)];
      const Point& b = pool.points[any(rng)];
      if (a != b) segments.push_back({a, b, {}});
    }

    for (const Segment& s : segments) {
      std::vector<Point> refs = s.extra_refs;
      refs.insert(refs.end(), pool.points.begin(), pool.points.end());
      if (auto w = endpoint_probe(oracle, s, cfg, refs)) return Verdict::violated(std::move(*w), cfg.resolution);
      std::vector<Point> zs = s.extra_refs;
      for (const Point& h : hints.points)
        if (static_cast<int>(h.size()) == n && domain.contains(h)) zs.push_back(h);
      for (int k = 0; k < 4; ++k) zs.push_back(pool.points[any(rng)]);
      for (const Point& z : zs)
        if (auto w = boundary_probe(oracle, s, z, cfg, refs))
          return Verdict::violated(std::move(*w), cfg.resolution);
    }
  } catch (const IncomparableFound& e) {
    return incomparable_verdict(e, cfg.resolution);
  }
  return Verdict::holds(cfg.resolution);
}

}  // namespace relab
