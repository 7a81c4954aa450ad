#include "relab/checkers/checkers.hpp"
#include "relab/checkers/support.hpp"

#include <algorithm>
#include <random>
#include <string_view>

namespace relab {

namespace {

Verdict basic_fail(std::string_view property, std::vector<std::pair<std::string, AnyPoint>> points,
                   std::vector<ComparisonRecord> transcript, double resolution) {
  Witness w;
  w.kind = WitnessKind::BasicFail;
  w.detail = std::string(property);
  w.points = std::move(points);
  w.transcript = std::move(transcript);
  return Verdict::violated(std::move(w), resolution);
}

const Point& pick(const std::vector<Point>& pts, std::mt19937_64& rng) {
  return pts[std::uniform_int_distribution<std::size_t>(0, pts.size() - 1)(rng)];
}

std::optional<Verdict> float_gate(const ComparisonOracle& oracle) {
  if (!oracle.has_float()) return Verdict::inapplicable("oracle has no Float64 comparison");
  return std::nullopt;
}

// Hint points plus a few random pool points.
std::vector<Point> probe_points(const SamplePool& pool, const Hints& hints, const Domain& domain,
                                std::mt19937_64& rng, int count) {
  std::vector<Point> out;
  for (const Point& h : hints.points)
    if (static_cast<int>(h.size()) == domain.dimension() && domain.contains(h)) out.push_back(h);
  for (int i = 0; i < count; ++i) out.push_back(pick(pool.points, rng));
  return out;
}

}  // namespace

Verdict check_completeness(const ComparisonOracle& oracle, const Domain& domain, const CheckConfig& cfg,
                           const Hints& hints) {
  cfg.validate();
  if (auto g = float_gate(oracle)) return *g;
  SamplePool pool = build_pool(domain, cfg, hints);
  auto rng = checker_rng(cfg, 11);
  std::vector<Point> pts = probe_points(pool, hints, domain, rng, 0);
  for (const Point& p : pool.limits) pts.push_back(p);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (int k = 0; k < 4; ++k) {
      const Point& q = k == 0 ? pts[i] : pick(pool.points, rng);
      Recorder rec(oracle);
      Comparison ab = rec(pts[i], q);
      Comparison ba = rec(q, pts[i]);
      if (ab == Comparison::Incomp || ba == Comparison::Incomp || ba != converse(ab))
        return basic_fail(keys::complete, {{"a", pts[i]}, {"b", q}}, rec.take(), cfg.resolution);
    }
  }
  return Verdict::holds(cfg.resolution);
}

Verdict check_transitivity(const ComparisonOracle& oracle, const Domain& domain, const CheckConfig& cfg,
                           const Hints& hints) {
  cfg.validate();
  if (auto g = float_gate(oracle)) return *g;
  SamplePool pool = build_pool(domain, cfg, hints);
  auto rng = checker_rng(cfg, 12);
  std::vector<Point> pts = probe_points(pool, hints, domain, rng, 3 * cfg.sample_budget);
  std::vector<std::array<Point, 3>> triples;
  for (const auto& t : hints.triples) triples.push_back(t);
  for (std::size_t i = 0; i + 2 < pts.size(); i += 3) triples.push_back({pts[i], pts[i + 1], pts[i + 2]});
  for (const auto& t : triples) {
    if (static_cast<int>(t[0].size()) != domain.dimension()) continue;
    std::array<int, 3> perm{0, 1, 2};
    do {
      const Point& x = t[perm[0]];
      const Point& y = t[perm[1]];
      const Point& z = t[perm[2]];
      Recorder rec(oracle);
      Comparison xy = rec(x, y);
      Comparison yz = rec(y, z);
      if (!weakly_above(xy) || !weakly_above(yz)) continue;
      Comparison xz = rec(x, z);
      bool strict = xy == Comparison::Succ || yz == Comparison::Succ;
      if (!weakly_above(xz) || (strict && xz != Comparison::Succ))
        return basic_fail(keys::transitive, {{"x", x}, {"y", y}, {"z", z}}, rec.take(), cfg.resolution);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return Verdict::holds(cfg.resolution);
}

Verdict check_weak_monotonicity(const ComparisonOracle& oracle, const Domain& domain, const CheckConfig& cfg,
                                const Hints& hints) {
  cfg.validate();
  if (auto g = float_gate(oracle)) return *g;
  SamplePool pool = build_pool(domain, cfg, hints);
  const int n = domain.dimension();
  try {
    for (std::size_t k = 0; k < pool.limits.size(); ++k) {
      const Point& y = pool.limits[k];
      for (int i = 0; i < n; ++i) {
        for (double s : {pool.pitch, cfg.resolution}) {
          Point x = y;
          x[i] += s;
          if (!domain.contains(x)) continue;
          Recorder rec(oracle);
          if (!weakly_above(rec(x, y)))
            return basic_fail(keys::weakly_monotone, {{"x", x}, {"y", y}}, rec.take(), cfg.resolution);
        }
      }
      Point x = y;
      for (double& v : x) v += pool.pitch;
      if (domain.contains(x)) {
        Recorder rec(oracle);
        if (!weakly_above(rec(x, y)))
          return basic_fail(keys::weakly_monotone, {{"x", x}, {"y", y}}, rec.take(), cfg.resolution);
      }
    }
  } catch (const IncomparableFound& e) {
    return incomparable_verdict(e, cfg.resolution);
  }
  return Verdict::holds(cfg.resolution);
}

Verdict check_order_density(const ComparisonOracle& oracle, const Domain& domain, const CheckConfig& cfg,
                            const Hints& hints) {
  cfg.validate();
  if (auto g = float_gate(oracle)) return *g;
  SamplePool pool = build_pool(domain, cfg, hints);
  auto rng = checker_rng(cfg, 14);
  std::vector<std::pair<Point, Point>> pairs;
  std::vector<Point> hint_pts;
  for (const Point& h : hints.points)
    if (static_cast<int>(h.size()) == domain.dimension() && domain.contains(h)) hint_pts.push_back(h);
  for (const Point& a : hint_pts)
    for (const Point& b : hint_pts)
      if (a != b) pairs.emplace_back(a, b);
  for (int k = 0; k < cfg.sample_budget; ++k) pairs.emplace_back(pick(pool.points, rng), pick(pool.points, rng));

  try {
    for (auto [x, y] : pairs) {
      Comparison xy = compare_complete(oracle, x, y);
      if (xy == Comparison::Prec) std::swap(x, y);
      else if (xy != Comparison::Succ) continue;

      std::vector<Point> probes;
      if (domain.contains(mixture(x, y, 0.5))) probes.push_back(mixture(x, y, 0.5));
      for (int j = 1; j < 64; ++j) {
        Point m = mixture(x, y, j / 64.0);
        if (domain.contains(m)) probes.push_back(std::move(m));
      }
      for (const Point& p : separator_ladder(domain, x)) probes.push_back(p);
      for (const Point& p : separator_ladder(domain, y)) probes.push_back(p);
      probes.insert(probes.end(), pool.points.begin(), pool.points.end());

      bool found = false;
      Recorder rec(oracle);
      rec(x, y);
      for (const Point& z : probes) {
        Comparison zy = compare_complete(oracle, z, y);
        if (zy != Comparison::Succ) {
          rec.log().push_back({z, y, zy});
          continue;
        }
        Comparison xz = compare_complete(oracle, x, z);
        if (xz == Comparison::Succ) {
          found = true;
          break;
        }
        rec.log().push_back({x, z, xz});
      }
      if (!found) {
        Witness w;
        w.kind = WitnessKind::DenseGap;
        w.detail = "no sampled z with x > z > y";
        w.points = {{"x", x}, {"y", y}};
        w.params = {{"probes", static_cast<double>(probes.size())}};
        w.transcript = rec.take();
        return Verdict::violated(std::move(w), cfg.resolution);
      }
    }
  } catch (const IncomparableFound& e) {
    return incomparable_verdict(e, cfg.resolution);
  }
  return Verdict::holds(cfg.resolution);
}

Verdict check_convex_upper(const ComparisonOracle& oracle, const Domain& domain, const CheckConfig& cfg,
                           const Hints& hints) {
  cfg.validate();
  if (auto g = float_gate(oracle)) return *g;
  if (!domain.convex()) return Verdict::inapplicable("domain is not convex");
  SamplePool pool = build_pool(domain, cfg, hints);
  auto rng = checker_rng(cfg, 15);
  std::vector<std::array<Point, 3>> triples;
  for (const auto& t : hints.triples)
    if (static_cast<int>(t[0].size()) == domain.dimension()) triples.push_back(t);
  for (int k = 0; k < 4 * cfg.sample_budget; ++k)
    triples.push_back({pick(pool.points, rng), pick(pool.points, rng), pick(pool.points, rng)});
  try {
    for (const auto& t : triples) {
      for (int zi = 0; zi < 3; ++zi) {
        const Point& z = t[zi];
        const Point& x = t[(zi + 1) % 3];
        const Point& y = t[(zi + 2) % 3];
        if (!weakly_above(compare_complete(oracle, x, z)) || !weakly_above(compare_complete(oracle, y, z)))
          continue;
        for (double lambda : {0.25, 0.5, 0.75}) {
          Point m = mixture(x, y, lambda);
          if (!domain.contains(m)) continue;
          if (!weakly_above(compare_complete(oracle, m, z))) {
            Recorder rec(oracle);
            rec(x, z);
            rec(y, z);
            rec(m, z);
            return basic_fail(keys::convex_upper, {{"x", x}, {"y", y}, {"z", z}, {"mixture", m}}, rec.take(),
                              cfg.resolution);
          }
        }
      }
    }
  } catch (const IncomparableFound& e) {
    return incomparable_verdict(e, cfg.resolution);
  }
  return Verdict::holds(cfg.resolution);
}

std::map<std::string, Verdict> check_basic(const ComparisonOracle& oracle, const Domain& domain,
                                           const CheckConfig& cfg, const Hints& hints) {
  return {{std::string(keys::complete), check_completeness(oracle, domain, cfg, hints)},
          {std::string(keys::transitive), check_transitivity(oracle, domain, cfg, hints)},
          {std::string(keys::weakly_monotone), check_weak_monotonicity(oracle, domain, cfg, hints)},
          {std::string(keys::order_dense), check_order_density(oracle, domain, cfg, hints)},
          {std::string(keys::convex_upper), check_convex_upper(oracle, domain, cfg, hints)}};
}

}  // namespace relab
