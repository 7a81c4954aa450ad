#include "relab/seqspace/seqspace.hpp"

#include "relab/core/errors.hpp"
#include "relab/core/properties.hpp"

#include <algorithm>
#include <random>

namespace relab::seq {

namespace {

const QSqrt2 kBound(10);

bool open_box(const QSqrt2& v) { return -kBound < v && v < kBound; }

Comparison compare_values(const QSqrt2& a, const QSqrt2& b) {
  if (a > b) return Comparison::Succ;
  if (a < b) return Comparison::Prec;
  return Comparison::Indiff;
}

QSqrt2 quarter(long k) { return QSqrt2(mpq_class(k, 4)); }

// Quarter-grid points with up to 4 prefix entries in [-9, 9].
std::vector<SeqPoint> sample(std::mt19937_64& rng, int count) {
  std::uniform_int_distribution<long> value(-36, 36);
  std::uniform_int_distribution<int> len(0, 4);
  std::vector<SeqPoint> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<QSqrt2> prefix(static_cast<std::size_t>(len(rng)));
    for (QSqrt2& v : prefix) v = quarter(value(rng));
    out.push_back(make(std::move(prefix), quarter(value(rng))));
  }
  return out;
}

// Witness when every seq point sits weakly on one side of a reference and the limit strictly
// on the other.
std::optional<Witness> closure_probe(const ComparisonOracle& oracle, const std::vector<SeqPoint>& seq,
                                     const SeqPoint& limit, const std::vector<SeqPoint>& refs) {
  for (const SeqPoint& z : refs) {
    Comparison cl = oracle.compare(limit, z);
    if (cl == Comparison::Indiff) continue;
    bool upper = cl == Comparison::Prec;
    bool all = std::all_of(seq.begin(), seq.end(), [&](const SeqPoint& p) {
      Comparison c = oracle.compare(p, z);
      return upper ? weakly_above(c) : weakly_below(c);
    });
    if (!all) continue;
    Witness w;
    w.kind = WitnessKind::Closure;
    w.detail = upper ? "upper" : "lower";
    w.points = {{"x", z}, {"limit", limit}};
    Recorder rec(oracle);
    for (std::size_t k = 0; k < seq.size(); ++k) {
      w.points.emplace_back("p" + std::to_string(k), seq[k]);
      rec(seq[k], z);
    }
    rec(limit, z);
    w.transcript = rec.take();
    return w;
  }
  return std::nullopt;
}

Verdict from_probe(const std::optional<Witness>& w, double resolution) {
  return w ? Verdict::violated(*w, resolution) : Verdict::holds(resolution);
}

// p + s 2^-k for k = 0..depth, as rationals.
std::vector<QSqrt2> approach(const QSqrt2& p, const QSqrt2& s, int depth) {
  std::vector<QSqrt2> out;
  QSqrt2 step = s;
  for (int k = 0; k <= depth; ++k) {
    out.push_back(p + step);
    step /= QSqrt2(2);
  }
  return out;
}

Verdict separate_claim(const ComparisonOracle& oracle, const std::vector<SeqPoint>& bases,
                       const std::vector<SeqPoint>& refs, double resolution) {
  for (const SeqPoint& base : bases) {
    for (std::size_t i = 0; i <= base.prefix.size(); ++i) {
      for (long c = -8; c <= 8; c += 2) {
        for (long s : {-1L, 1L}) {
          std::vector<SeqPoint> seq;
          for (const QSqrt2& v : approach(QSqrt2(c), quarter(s), 16)) seq.push_back(with_coordinate(base, i, v));
          if (auto w = closure_probe(oracle, seq, with_coordinate(base, i, QSqrt2(c)), refs)) {
            w->params.emplace_back("coordinate", static_cast<double>(i + 1));
            return Verdict::violated(*w, resolution);
          }
        }
      }
    }
  }
  return Verdict::holds(resolution);
}

Verdict mixture_claim(const ComparisonOracle& oracle, const std::vector<SeqPoint>& pts,
                      const std::vector<SeqPoint>& refs, double resolution) {
  for (std::size_t k = 0; k + 1 < pts.size(); k += 2) {
    const SeqPoint &a = pts[k], &b = pts[k + 1];
    std::vector<SeqPoint> local = refs;
    local.push_back(a);
    local.push_back(b);
    for (long j = 0; j <= 8; ++j) {
      QSqrt2 lambda(mpq_class(j, 8));
      for (long s : {-1L, 1L}) {
        if ((j == 0 && s < 0) || (j == 8 && s > 0)) continue;
        std::vector<SeqPoint> seq;
        for (const QSqrt2& l : approach(lambda, QSqrt2(mpq_class(s, 8)), 16)) seq.push_back(mixture(a, b, l));
        if (auto w = closure_probe(oracle, seq, mixture(a, b, lambda), local)) {
          w->points.emplace_back("segment_x", a);
          w->points.emplace_back("segment_y", b);
          w->params.emplace_back("lambda", lambda.to_double());
          return Verdict::violated(*w, resolution);
        }
      }
    }
  }
  return Verdict::holds(resolution);
}

// For x > y and any z: some mixture x t z stays above y, and x stays above some y t z.
Verdict archimedean_claim(const ComparisonOracle& oracle, const std::vector<SeqPoint>& pts, double resolution) {
  int strict = 0;
  for (std::size_t k = 0; k + 2 < pts.size(); k += 3) {
    SeqPoint x = pts[k], y = pts[k + 1];
    const SeqPoint& z = pts[k + 2];
    Comparison c = oracle.compare(x, y);
    if (c == Comparison::Indiff) continue;
    if (c == Comparison::Prec) std::swap(x, y);
    ++strict;
    bool lam = false, del = false;
    QSqrt2 gap(1);
    Recorder rec(oracle);
    for (int j = 1; j <= 60 && !(lam && del); ++j) {
      gap /= QSqrt2(2);
      QSqrt2 t = QSqrt2(1) - gap;
      lam = lam || rec(mixture(x, z, t), y) == Comparison::Succ;
      del = del || rec(x, mixture(y, z, t)) == Comparison::Succ;
    }
    if (lam && del) continue;
    Witness w;
    w.kind = WitnessKind::ArchScan;
    w.detail = lam ? "no delta with x > y delta z" : "no lambda with x lambda z > y";
    w.points = {{"x", x}, {"y", y}, {"z", z}};
    w.params = {{"evaluated", 60.0}};
    w.transcript = rec.take();
    return Verdict::violated(std::move(w), resolution);
  }
  if (strict == 0) return Verdict::inapplicable("no strict pairs sampled");
  return Verdict::holds(resolution);
}

// Coordinate lines c in [-9, 9]; inf of the line is min(c, m), so the candidate solutions are
// u(x) and the upper end.
Verdict restricted_claim(const ComparisonOracle& oracle, const std::vector<SeqPoint>& pts, double resolution) {
  const QSqrt2 lo(-9), hi(9);
  for (std::size_t k = 0; k + 1 < pts.size(); k += 2) {
    const SeqPoint &x = pts[k], &base = pts[k + 1];
    for (std::size_t i = 0; i <= base.prefix.size(); ++i) {
      SeqPoint top = with_coordinate(base, i, hi), bottom = with_coordinate(base, i, lo);
      if (!weakly_above(oracle.compare(top, x)) || !weakly_below(oracle.compare(bottom, x))) continue;
      bool solved = false;
      for (const QSqrt2& c : {inf_utility(x), hi}) {
        if (c < lo || c > hi) continue;
        if (oracle.compare(with_coordinate(base, i, c), x) == Comparison::Indiff) {
          solved = true;
          break;
        }
      }
      if (solved) continue;
      Witness w;
      w.kind = WitnessKind::SolvGap;
      w.detail = "no exact solution on the coordinate line";
      w.points = {{"x", x}, {"base", base}, {"succ_end", top}, {"prec_end", bottom}};
      w.params = {{"coordinate", static_cast<double>(i + 1)}};
      Recorder rec(oracle);
      rec(top, x);
      rec(bottom, x);
      w.transcript = rec.take();
      return Verdict::violated(std::move(w), resolution);
    }
  }
  return Verdict::holds(resolution);
}

}  // namespace

SeqPoint canonical(SeqPoint p) {
  while (!p.prefix.empty() && p.prefix.back() == p.tail) p.prefix.pop_back();
  return p;
}

bool in_box(const SeqPoint& p) {
  return open_box(p.tail) && std::all_of(p.prefix.begin(), p.prefix.end(), open_box);
}

SeqPoint make(std::vector<QSqrt2> prefix, QSqrt2 tail) {
  SeqPoint p = canonical(SeqPoint{std::move(prefix), std::move(tail)});
  if (!in_box(p)) throw UsageError("sequence point leaves the box (-10, 10): " + format_point(p));
  return p;
}

SeqPoint constant(const QSqrt2& c) { return make({}, c); }

QSqrt2 coordinate(const SeqPoint& p, std::size_t i) { return i < p.prefix.size() ? p.prefix[i] : p.tail; }

SeqPoint with_coordinate(const SeqPoint& p, std::size_t i, const QSqrt2& c) {
  SeqPoint out = p;
  if (i >= out.prefix.size()) out.prefix.resize(i + 1, out.tail);
  out.prefix[i] = c;
  return canonical(std::move(out));
}

QSqrt2 inf_utility(const SeqPoint& p) {
  QSqrt2 m = p.tail;
  for (const QSqrt2& v : p.prefix) m = std::min(m, v);
  return m;
}

SeqPoint mixture(const SeqPoint& a, const SeqPoint& b, const QSqrt2& lambda) {
  if (lambda < QSqrt2(0) || lambda > QSqrt2(1)) throw UsageError("mixture: lambda outside [0,1]");
  const QSqrt2 mu = QSqrt2(1) - lambda;
  SeqPoint out;
  std::size_t n = std::max(a.prefix.size(), b.prefix.size());
  out.prefix.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.prefix.push_back(lambda * coordinate(a, i) + mu * coordinate(b, i));
  out.tail = lambda * a.tail + mu * b.tail;
  return canonical(std::move(out));
}

SeqPoint y_n(int n) {
  if (n < 0) throw UsageError("y_n: n must be nonnegative");
  return make(std::vector<QSqrt2>(static_cast<std::size_t>(n), QSqrt2(2)), QSqrt2(0));
}

ComparisonOracle inf_oracle() {
  return ComparisonOracle("seqspace_inf", 0, {}, {}, [](const SeqPoint& a, const SeqPoint& b) {
    return compare_values(inf_utility(a), inf_utility(b));
  });
}

AssumptionProfile inf_profile() {
  AssumptionProfile p;
  p.weakly_monotone = true;
  p.order_dense = true;
  p.order_bounded = true;
  p.finite_dimensional = false;
  p.dimension = 0;
  return p;
}

ConvergenceReport converges_to(const Family& seq, const SeqPoint& limit, int coord_budget, const QSqrt2& tol,
                               int horizon) {
  if (coord_budget < 1) throw UsageError("converges_to: coord_budget must be at least 1");
  if (horizon <= 0) horizon = 2 * coord_budget + 2;
  std::vector<SeqPoint> terms;
  terms.reserve(static_cast<std::size_t>(horizon));
  for (int n = 1; n <= horizon; ++n) terms.push_back(seq(n));

  ConvergenceReport r;
  for (std::size_t i = 0; i < static_cast<std::size_t>(coord_budget); ++i) {
    const QSqrt2 target = coordinate(limit, i);
    CoordinateReport c;
    c.index = i;
    // Walk back from the horizon while the coordinate stays close.
    int from = horizon + 1;
    while (from > 1) {
      QSqrt2 d = coordinate(terms[static_cast<std::size_t>(from - 2)], i) - target;
      if ((d.sign() < 0 ? -d : d) > tol) break;
      --from;
    }
    // Settling only in the final quarter of the horizon is not evidence of convergence.
    c.ok = from <= horizon - horizon / 4;
    if (from <= horizon) c.settles_at = from;
    if (!c.ok && !r.first_failure) r.first_failure = i;
    r.converges = r.converges && c.ok;
    r.coordinates.push_back(c);
  }
  return r;
}

SeqFixtureReport seq_fixture_checks(const CheckConfig& cfg, int witness_budget, int coord_budget) {
  cfg.validate();
  if (witness_budget < 1) throw UsageError("seq_fixture_checks: witness budget must be at least 1");
  SeqFixtureReport r;
  r.name = "seqspace_inf";
  r.profile = inf_profile();
  r.expected = {{std::string(keys::separate), VerdictKind::Holds},
                {std::string(keys::mixture), VerdictKind::Holds},
                {std::string(keys::continuity), VerdictKind::Violated}};
  const ComparisonOracle oracle = inf_oracle();
  const double res = cfg.resolution;

  const SeqPoint x = constant(QSqrt2(1)), y = constant(QSqrt2(2));
  r.convergence = converges_to(y_n, y, std::max(coord_budget, witness_budget + 1));
  std::vector<SeqPoint> ys;
  for (int n = 1; n <= witness_budget; ++n) ys.push_back(y_n(n));
  std::optional<Witness> w = r.convergence.converges ? closure_probe(oracle, ys, y, {x}) : std::nullopt;
  if (w) w->params.emplace_back("coord_budget", static_cast<double>(coord_budget));
  r.verdicts[std::string(keys::continuity)] = from_probe(w, res);

  std::mt19937_64 rng(cfg.seed ^ 0x5e95ULL);
  const int count = std::clamp(cfg.sample_budget / 8, 6, 64);
  std::vector<SeqPoint> pts = sample(rng, 3 * count);
  std::vector<SeqPoint> refs = sample(rng, 6);
  refs.push_back(x);
  refs.push_back(y);

  std::vector<SeqPoint> bases(pts.begin(), pts.begin() + count);
  r.verdicts[std::string(keys::separate)] = separate_claim(oracle, bases, refs, res);
  r.verdicts[std::string(keys::mixture)] = mixture_claim(oracle, pts, refs, res);
  r.verdicts[std::string(keys::archimedean)] = archimedean_claim(oracle, pts, res);
  r.verdicts[std::string(keys::restricted_solvability)] = restricted_claim(oracle, pts, res);
  return r;
}

}  // namespace relab::seq
