#include "relab/checkers/checkers.hpp"
#include "relab/checkers/support.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace relab {

namespace {

// Looks for t in [2^-depth, 1 - 2^-depth] with ok(at(t)). `better` orders candidates for the
// local climb. Every comparison goes through `rec`.
class MixtureSearch {
 public:
  MixtureSearch(std::function<Point(double)> at, std::function<bool(const Point&)> ok,
                std::function<bool(const Point&, const Point&)> better, const CheckConfig& cfg)
      : at_(std::move(at)), ok_(std::move(ok)), better_(std::move(better)), cfg_(cfg) {}

  bool run() {
    const int depth = cfg_.refine_depth;
    for (int k = 1; k <= depth; ++k) {
      if (try_t(1.0 - std::ldexp(1.0, -k))) return true;
      if (try_t(std::ldexp(1.0, -k))) return true;
    }
    const int grid = static_cast<int>(std::ceil(1.0 / cfg_.resolution));
    for (int j = 1; j < grid; ++j)
      if (try_t(static_cast<double>(j) / grid)) return true;
    std::vector<double> sorted = tried_;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> top = top_;
    for (double t : top) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), t);
      double lo = it == sorted.begin() ? lo_bound() : *(it - 1);
      double hi = it + 1 == sorted.end() ? hi_bound() : *(it + 1);
      if (climb(lo, hi)) return true;
    }
    return false;
  }

  int evaluated() const { return static_cast<int>(tried_.size()); }

 private:
  double lo_bound() const { return std::ldexp(1.0, -cfg_.refine_depth); }
  double hi_bound() const { return 1.0 - std::ldexp(1.0, -cfg_.refine_depth); }

  bool try_t(double t) {
    t = std::clamp(t, lo_bound(), hi_bound());
    Point p = at_(t);
    tried_.push_back(t);
    if (ok_(p)) return true;
    // keep the three best candidates, best first
    std::size_t pos = top_.size();
    while (pos > 0 && better_(p, at_(top_[pos - 1]))) --pos;
    if (pos < 3) {
      top_.insert(top_.begin() + static_cast<std::ptrdiff_t>(pos), t);
      if (top_.size() > 3) top_.pop_back();
    }
    return false;
  }

  bool climb(double a, double b) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - phi * (b - a), d = a + phi * (b - a);
    Point pc = at_(c), pd = at_(d);
    if (ok_(pc) || ok_(pd)) return true;
    for (int it = 0; it < 120 && b - a > 1e-16; ++it) {
      if (better_(pc, pd)) {
        b = d;
        d = c;
        pd = pc;
        c = b - phi * (b - a);
        pc = at_(c);
        if (ok_(pc)) return true;
      } else {
        a = c;
        c = d;
        pc = pd;
        d = a + phi * (b - a);
        pd = at_(d);
        if (ok_(pd)) return true;
      }
    }
    return false;
  }

  std::function<Point(double)> at_;
  std::function<bool(const Point&)> ok_;
  std::function<bool(const Point&, const Point&)> better_;
  const CheckConfig& cfg_;
  std::vector<double> tried_;
  std::vector<double> top_;
};

Comparison checked(Recorder& rec, const Point& a, const Point& b) {
  Comparison c = rec(a, b);
  if (c == Comparison::Incomp) throw IncomparableFound{a, b};
  return c;
}

std::optional<Witness> archimedean_triple(const ComparisonOracle& oracle, const Point& x, const Point& y,
                                          const Point& z, const CheckConfig& cfg) {
  {
    Recorder rec(oracle);
    MixtureSearch lambda(
        [&](double t) { return mixture(x, z, t); },
        [&](const Point& p) { return checked(rec, p, y) == Comparison::Succ; },
        [&](const Point& p, const Point& q) { return checked(rec, p, q) == Comparison::Succ; }, cfg);
    if (!lambda.run()) {
      Witness w;
      w.kind = WitnessKind::ArchScan;
      w.detail = "no lambda with x lambda z > y";
      w.points = {{"x", x}, {"y", y}, {"z", z}};
      w.params = {{"evaluated", lambda.evaluated()}};
      w.transcript = rec.take();
      return w;
    }
  }
  Recorder rec(oracle);
  MixtureSearch delta(
      [&](double t) { return mixture(y, z, t); },
      [&](const Point& p) { return checked(rec, x, p) == Comparison::Succ; },
      [&](const Point& p, const Point& q) { return checked(rec, p, q) == Comparison::Prec; }, cfg);
  if (!delta.run()) {
    Witness w;
    w.kind = WitnessKind::ArchScan;
    w.detail = "no delta with x > y delta z";
    w.points = {{"x", x}, {"y", y}, {"z", z}};
    w.params = {{"evaluated", delta.evaluated()}};
    w.transcript = rec.take();
    return w;
  }
  return std::nullopt;
}

}  // namespace

Verdict check_archimedean(const ComparisonOracle& oracle, const Domain& domain, const CheckConfig& cfg,
                          const Hints& hints) {
  cfg.validate();
  if (!oracle.has_float()) return Verdict::inapplicable("oracle has no Float64 comparison");
  if (!domain.convex()) return Verdict::inapplicable("domain is not convex");
  const int n = domain.dimension();
  try {
    std::vector<std::array<Point, 3>> triples;
    for (const auto& t : hints.triples) {
      if (static_cast<int>(t[0].size()) != n) continue;
      std::array<int, 3> perm{0, 1, 2};
      do triples.push_back({t[perm[0]], t[perm[1]], t[perm[2]]});
      while (std::next_permutation(perm.begin(), perm.end()));
    }
    SamplePool pool = build_pool(domain, cfg, hints);
    auto rng = checker_rng(cfg, 31);
    std::uniform_int_distribution<std::size_t> any(0, pool.points.size() - 1);
    for (int k = 0; k < cfg.sample_budget; ++k)
      triples.push_back({pool.points[any(rng)], pool.points[any(rng)], pool.points[any(rng)]});

    int strict = 0;
    for (auto [x, y, z] : triples) {
      Comparison c = compare_complete(oracle, x, y);
      if (c == Comparison::Prec) std::swap(x, y);
      else if (c != Comparison::Succ) continue;
      ++strict;
      if (auto w = archimedean_triple(oracle, x, y, z, cfg)) return Verdict::violated(std::move(*w), cfg.resolution);
    }
    if (strict == 0) return Verdict::inapplicable("no strictly ordered pair in the sample");
  } catch (const IncomparableFound& e) {
    return incomparable_verdict(e, cfg.resolution);
  }
  return Verdict::holds(cfg.resolution);
}

}  // namespace relab
