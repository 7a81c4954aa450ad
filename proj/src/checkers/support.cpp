#include "relab/checkers/support.hpp"

#include "relab/core/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace relab {

Verdict incomparable_verdict(const IncomparableFound& e, double resolution) {
  Witness w;
  w.kind = WitnessKind::BasicFail;
  w.detail = "complete";
  w.points = {{"a", e.a}, {"b", e.b}};
  w.transcript.push_back({e.a, e.b, Comparison::Incomp});
  return Verdict::violated(std::move(w), resolution);
}

Comparison compare_complete(const ComparisonOracle& oracle, const Point& a, const Point& b) {
  Comparison c = oracle.compare(a, b);
  if (c == Comparison::Incomp) throw IncomparableFound{a, b};
  return c;
}

std::mt19937_64 checker_rng(const CheckConfig& cfg, std::uint64_t salt) {
  return std::mt19937_64(cfg.seed * 0x9E3779B97F4A7C15ULL ^ (salt * 0xD1B54A32D192ED03ULL + 1));
}

SamplePool build_pool(const Domain& domain, const CheckConfig& cfg, const Hints& hints) {
  const int n = domain.dimension();
  const double width = domain.max_width();
  int m = 1;
  while (m < 24 && std::pow(std::ldexp(1.0, m + 1) + 1.0, n) <= cfg.pool_size) ++m;
  double pitch = width > 0.0 ? std::max(std::ldexp(width, -m), cfg.resolution) : 1.0;

  SamplePool pool;
  pool.pitch = pitch;
  for (const Point& h : hints.points)
    if (static_cast<int>(h.size()) == n && domain.contains(h)) pool.points.push_back(h);
  std::size_t jitter = static_cast<std::size_t>(std::max(4, cfg.pool_size / 16));
  std::vector<Point> grid = sample_grid(domain, pitch, cfg.seed, jitter);
  pool.points.insert(pool.points.end(), grid.begin(), grid.end());

  std::vector<std::size_t> order(pool.points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto rng = checker_rng(cfg, 1);
  std::shuffle(order.begin(), order.end(), rng);
  std::size_t hint_count = pool.points.size() - grid.size();
  for (std::size_t i = 0; i < hint_count; ++i) pool.limits.push_back(pool.points[i]);
  for (std::size_t i = 0; i < order.size() && static_cast<int>(pool.limits.size()) < cfg.sample_budget; ++i)
    if (order[i] >= hint_count) pool.limits.push_back(pool.points[order[i]]);
  return pool;
}

namespace {

Point normalized(Point v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  s = std::sqrt(s);
  if (s == 0.0) return v;
  for (double& x : v) x /= s;
  return v;
}

void push_unique(std::vector<Point>& out, Point p) {
  if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
}

}  // namespace

std::vector<Point> direction_bundle(int n, const CheckConfig& cfg, const Hints& hints, bool axes_only) {
  std::vector<Point> out;
  for (int i = 0; i < n; ++i) {
    Point e(n, 0.0);
    e[i] = 1.0;
    push_unique(out, e);
    e[i] = -1.0;
    push_unique(out, e);
  }
  if (axes_only) return out;
  Point diag = normalized(Point(n, 1.0));
  push_unique(out, diag);
  for (double& v : diag) v = -v;
  push_unique(out, diag);
  for (const Point& h : hints.directions) {
    if (static_cast<int>(h.size()) != n) continue;
    Point d = normalized(h);
    push_unique(out, d);
    for (double& v : d) v = -v;
    push_unique(out, d);
  }
  if (n >= 2) {
    auto rng = checker_rng(cfg, 2);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int k = 0; k < 4; ++k) {
      Point d(n);
      for (double& v : d) v = gauss(rng);
      push_unique(out, normalized(d));
    }
  }
  return out;
}

std::vector<Point> separator_ladder(const Domain& domain, const Point& z, double min_step) {
  const int n = domain.dimension();
  const double width = domain.max_width();
  const double diag = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<Point> out;
  for (int j = 1; j <= 30; ++j) {
    double s = std::ldexp(width, -j);
    if (s < min_step) break;
    for (int sign : {1, -1}) {
      for (int i = 0; i < n; ++i) {
        Point p = z;
        p[i] += sign * s;
        if (domain.contains(p)) out.push_back(std::move(p));
      }
      if (n > 1) {
        Point p = z;
        for (double& v : p) v += sign * s * diag;
        if (domain.contains(p)) out.push_back(std::move(p));
      }
    }
  }
  return out;
}

std::vector<Point> approach_sequence(const Point& limit, const Point& dir, double step, int depth) {
  std::vector<Point> out;
  out.reserve(depth + 1);
  for (int k = 0; k <= depth; ++k) out.push_back(add_scaled(limit, dir, std::ldexp(step, -k)));
  return out;
}

CrossingOptions crossing_options(const CheckConfig& cfg) {
  CrossingOptions o;
  o.tol = cfg.bisect_tol;
  o.max_iter = cfg.bisect_max_iter;
  return o;
}

}  // namespace relab
