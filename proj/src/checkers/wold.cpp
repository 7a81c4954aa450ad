#include "relab/checkers/checkers.hpp"
#include "relab/checkers/support.hpp"
#include "relab/core/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace relab {

namespace {

// x > z > y triples: hint triples in every order, then random pool triples sorted by the oracle.
std::vector<std::array<Point, 3>> chains(const ComparisonOracle& oracle, const Domain& domain, const CheckConfig& cfg,
                                         const Hints& hints, std::uint64_t salt) {
  const int n = domain.dimension();
  std::vector<std::array<Point, 3>> raw;
  for (const auto& t : hints.triples)
    if (static_cast<int>(t[0].size()) == n) raw.push_back(t);
  SamplePool pool = build_pool(domain, cfg, hints);
  auto rng = checker_rng(cfg, salt);
  std::uniform_int_distribution<std::size_t> any(0, pool.points.size() - 1);
  for (int k = 0; k < cfg.sample_budget; ++k)
    raw.push_back({pool.points[any(rng)], pool.points[any(rng)], pool.points[any(rng)]});

  std::vector<std::array<Point, 3>> out;
  for (auto t : raw) {
    std::array<int, 3> perm{0, 1, 2};
    do {
      const Point& x = t[perm[0]];
      const Point& z = t[perm[1]];
      const Point& y = t[perm[2]];
      if (compare_complete(oracle, x, z) == Comparison::Succ && compare_complete(oracle, z, y) == Comparison::Succ) {
        out.push_back({x, z, y});
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

std::vector<Point> separators_for(const Domain& domain, const Point& z, const Hints& hints,
                                  const CheckConfig& cfg) {
  std::vector<Point> out = separator_ladder(domain, z, cfg.resolution);
  for (const Point& h : hints.points)
    if (h.size() == z.size() && domain.contains(h)) out.push_back(h);
  return out;
}

Witness miss_witness(WitnessKind kind, const std::string& curve, const Point& x, const Point& z, const Point& y,
                     const PathScan& scan, const Path& path, const ComparisonOracle& oracle, std::string reason) {
  Witness w;
  w.kind = kind;
  w.detail = curve + (reason.empty() ? std::string() : ": " + reason);
  w.points = {{"x", x}, {"z", z}, {"y", y}};
  Recorder rec(oracle);
  rec(x, z);
  rec(z, y);
  w.transcript = rec.take();
  for (std::size_t k = 1; k < scan.ts.size(); ++k) {
    if (scan.cs[k] == scan.cs[k - 1]) continue;
    w.transcript.push_back({path(scan.ts[k - 1]), z, scan.cs[k - 1]});
    w.transcript.push_back({path(scan.ts[k]), z, scan.cs[k]});
  }
  for (const Crossing& g : scan.gaps) {
    w.transcript.insert(w.transcript.end(), g.evidence.begin(), g.evidence.end());
    if (w.params.empty()) {
      w.params = {{"t_succ", g.t_succ}, {"t_prec", g.t_prec}};
      w.points.emplace_back("succ_end", g.succ_end);
      w.points.emplace_back("prec_end", g.prec_end);
    }
  }
  w.params.emplace_back("gaps", static_cast<double>(scan.gaps.size()));
  return w;
}

int scan_steps(const CheckConfig& cfg) { return static_cast<int>(std::ceil(1.0 / cfg.resolution)); }

// Solved, or a miss witness for the arc.
std::optional<Witness> scan_curve(const ComparisonOracle& oracle, const Domain& domain, const Curve& curve,
                                  const Point& x, const Point& z, const Point& y, const CheckConfig& cfg,
                                  const Hints& hints, WitnessKind kind) {
  const Path path = curve.at;
  if (curve.id == "segment" && oracle.segment_solver()) {
    SegmentSolve s = oracle.segment_solver()(x, y, z);
    if (s.status == SolveStatus::Solved) return std::nullopt;
    if (s.status == SolveStatus::NoSolution)
      return miss_witness(kind, curve.id, x, z, y, PathScan{}, path, oracle, s.reason);
  }
  PathScan scan = scan_path(oracle, path, 0.0, 1.0, scan_steps(cfg), z, crossing_options(cfg), {},
                            separators_for(domain, z, hints, cfg));
  if (scan.outcome != PathOutcome::Missed) return std::nullopt;
  return miss_witness(kind, curve.id, x, z, y, scan, path, oracle, {});
}

bool curve_inside(const Domain& domain, const Curve& c, int steps) {
  for (int k = 0; k <= steps; ++k)
    if (!domain.contains(c.at(static_cast<double>(k) / steps))) return false;
  return true;
}

}  // namespace

Verdict check_weak_wold(const ComparisonOracle& oracle, const Domain& domain, const CheckConfig& cfg,
                        const Hints& hints) {
  cfg.validate();
  if (!oracle.has_float()) return Verdict::inapplicable("oracle has no Float64 comparison");
  if (!domain.convex()) return Verdict::inapplicable("domain is not convex");
  Verdict od = check_order_density(oracle, domain, cfg, hints);
  if (od.is_violated()) return od;
  try {
    for (const auto& [x, z, y] : chains(oracle, domain, cfg, hints, 41)) {
      Curve seg{"segment", [x = x, y = y](double t) { return mixture(y, x, t); }, false};
      if (auto w = scan_curve(oracle, domain, seg, x, z, y, cfg, hints, WitnessKind::LineMiss))
        return Verdict::violated(std::move(*w), cfg.resolution);
    }
  } catch (const IncomparableFound& e) {
    return incomparable_verdict(e, cfg.resolution);
  }
  return Verdict::holds(cfg.resolution);
}

CurveFamily default_curve_family(const Domain& domain) {
  const int n = domain.dimension();
  return [n](const Point& x, const Point& y, std::uint64_t seed) {
    std::vector<Curve> out;
    out.push_back({"segment", [x, y](double t) { return mixture(y, x, t); }, false});

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double span = 0.0;
    for (int i = 0; i < n; ++i) span = std::max(span, std::fabs(x[i] - y[i]));
    for (int k = 0; k < 2; ++k) {
      Point c = mixture(x, y, 0.5);
      for (double& v : c) v += 0.5 * span * gauss(rng);
      out.push_back({"bezier" + std::to_string(k + 1),
                     [x, y, c](double t) {
                       Point p(x.size());
                       for (std::size_t i = 0; i < p.size(); ++i)
                         p[i] = (1 - t) * (1 - t) * x[i] + 2 * t * (1 - t) * c[i] + t * t * y[i];
                       return p;
                     },
                     false});
    }

    std::vector<int> moving;
    for (int i = 0; i < n; ++i)
      if (x[i] != y[i]) moving.push_back(i);
    if (moving.size() >= 2) {
      for (int r = 0; r < 2; ++r) {
        std::vector<int> order = moving;
        if (r == 1) std::reverse(order.begin(), order.end());
        out.push_back({r == 0 ? "staircase" : "staircase_reversed",
                       [x, y, order](double t) {
                         Point p = x;
                         const double m = static_cast<double>(order.size());
                         for (std::size_t k = 0; k < order.size(); ++k) {
                           double s = std::clamp(t * m - static_cast<double>(k), 0.0, 1.0);
                           int i = order[k];
                           p[i] = s == 1.0 ? y[i] : x[i] + s * (y[i] - x[i]);
                         }
                         return p;
                       },
                       false});
      }
    }
    return out;
  };
}

Verdict check_wold(const ComparisonOracle& oracle, const Domain& domain, const CurveFamily& curves,
                   const CheckConfig& cfg, const Hints& hints) {
  cfg.validate();
  if (!oracle.has_float()) return Verdict::inapplicable("oracle has no Float64 comparison");
  Verdict od = check_order_density(oracle, domain, cfg, hints);
  if (od.is_violated()) return od;
  const int steps = scan_steps(cfg);
  try {
    std::uint64_t k = 0;
    for (const auto& [x, z, y] : chains(oracle, domain, cfg, hints, 42)) {
      for (const Curve& c : curves(x, y, cfg.seed * 7919 + k++)) {
        if (!curve_inside(domain, c, steps)) {
          if (c.required) throw ConfigError("arc " + c.id + " leaves the domain");
          continue;
        }
        if (auto w = scan_curve(oracle, domain, c, x, z, y, cfg, hints, WitnessKind::CurveMiss))
          return Verdict::violated(std::move(*w), cfg.resolution);
      }
    }
  } catch (const IncomparableFound& e) {
    return incomparable_verdict(e, cfg.resolution);
  }
  return Verdict::holds(cfg.resolution);
}

Verdict check_wold(const ComparisonOracle& oracle, const Domain& domain, const CheckConfig& cfg,
                   const Hints& hints) {
  return check_wold(oracle, domain, default_curve_family(domain), cfg, hints);
}

}  // namespace relab
