#include "relab/representation/representation.hpp"

#include "relab/checkers/support.hpp"
#include "relab/core/errors.hpp"
#include "relab/core/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace relab {

namespace {

// Axis and diagonal ladder around x, steps from the segment scale down to the resolution.
std::vector<Point> ladder(const Point& x, double scale, double min_step) {
  const std::size_t n = x.size();
  const double diag = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<Point> out;
  for (int j = 1; j <= 30; ++j) {
    double s = std::ldexp(scale, -j);
    if (s < min_step) break;
    for (int sign : {1, -1}) {
      for (std::size_t i = 0; i < n; ++i) {
        Point p = x;
        p[i] += sign * s;
        out.push_back(std::move(p));
      }
      if (n > 1) {
        Point p = x;
        for (double& v : p) v += sign * s * diag;
        out.push_back(std::move(p));
      }
    }
  }
  return out;
}

IndiffCertificate endpoint_certificate(const Point& p, double lambda, std::vector<ComparisonRecord> transcript) {
  IndiffCertificate c;
  c.point = c.lower = c.upper = p;
  c.lambda = c.lambda_lower = c.lambda_upper = lambda;
  c.transcript = std::move(transcript);
  return c;
}

}  // namespace

RepresentationFailure::RepresentationFailure(Witness w)
    : std::runtime_error("representation failure: " + w.detail), witness_(std::move(w)) {}

SegmentResult solve_indifference_on_segment(const ComparisonOracle& oracle, const Point& x, const Point& a,
                                            const Point& b, const CheckConfig& cfg) {
  Recorder rec(oracle);
  Comparison ca = rec(a, x);
  Comparison cb = rec(b, x);
  if (ca == Comparison::Incomp || cb == Comparison::Incomp)
    return incomparable_verdict(IncomparableFound{ca == Comparison::Incomp ? a : b, x}, cfg.resolution)
        .witness.value();
  if (ca == Comparison::Indiff) return endpoint_certificate(a, 1.0, rec.take());
  if (cb == Comparison::Indiff) return endpoint_certificate(b, 0.0, rec.take());
  if (ca == cb) throw UsageError("solve_indifference_on_segment: a and b do not sandwich x");

  auto path = [&a, &b](double t) { return mixture(a, b, t); };
  const double t_succ = ca == Comparison::Succ ? 1.0 : 0.0;
  double scale = 1.0;
  for (std::size_t i = 0; i < a.size(); ++i) scale = std::max(scale, std::fabs(a[i] - b[i]));
  Crossing cr;
  try {
    cr = resolve_crossing(oracle, path, t_succ, 1.0 - t_succ, x, crossing_options(cfg),
                          ladder(x, scale, cfg.resolution));
  } catch (const IncomparableFound& e) {
    return incomparable_verdict(e, cfg.resolution).witness.value();
  }
  std::vector<ComparisonRecord> transcript = rec.take();
  transcript.insert(transcript.end(), cr.evidence.begin(), cr.evidence.end());

  if (cr.kind == CrossingKind::Gap) {
    Witness w;
    w.kind = WitnessKind::SolvGap;
    w.detail = cr.certificate;
    w.points = {{"x", x}, {"a", a}, {"b", b}, {"succ_end", cr.succ_end}, {"prec_end", cr.prec_end}};
    w.params = {{"lambda_succ", cr.t_succ}, {"lambda_prec", cr.t_prec}};
    w.transcript = std::move(transcript);
    return w;
  }
  IndiffCertificate c;
  c.iterations = cr.calls;
  c.transcript = std::move(transcript);
  c.exact = cr.kind == CrossingKind::Indifferent;
  c.lambda = cr.t;
  c.point = path(cr.t);
  c.upper = cr.succ_end;
  c.lambda_upper = cr.t_succ;
  c.lower = cr.prec_end;
  c.lambda_lower = cr.t_prec;
  return c;
}

IndiffCertificate wold_certificate(const ComparisonOracle& oracle, const Domain& domain, const Point& x,
                                   const CheckConfig& cfg) {
  const Point lo = domain.diag(0.0), hi = domain.diag(1.0);
  Point dir(lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) dir[i] = hi[i] - lo[i];
  auto iv = domain.line_interval(lo, dir);
  if (!iv || iv->first > 0.0 || iv->second < 1.0) throw RangeError("diagonal leaves the domain");
  if (oracle.compare(x, lo) == Comparison::Indiff) {
    Recorder rec(oracle);
    rec(x, lo);
    return endpoint_certificate(lo, 0.0, rec.take());
  }
  Comparison chi = oracle.compare(hi, x), clo = oracle.compare(x, lo);
  if (!weakly_above(chi) || !weakly_above(clo))
    throw RangeError("diagonal does not sandwich " + format_point(x));
  SegmentResult r = solve_indifference_on_segment(oracle, x, hi, lo, cfg);
  if (auto* w = std::get_if<Witness>(&r)) throw RepresentationFailure(*w);
  return std::get<IndiffCertificate>(std::move(r));
}

double wold_utility_value(const ComparisonOracle& oracle, const Domain& domain, const Point& x,
                          const CheckConfig& cfg) {
  return wold_certificate(oracle, domain, x, cfg).lambda;
}

std::size_t UtilityTable::failed_cells() const {
  return static_cast<std::size_t>(std::count(values.begin(), values.end(), std::nullopt));
}

UtilityTable build_utility_table(const ComparisonOracle& oracle, const Domain& domain, const CheckConfig& cfg,
                                 double pitch) {
  cfg.validate();
  UtilityTable t;
  t.pitch = pitch > 0.0 ? pitch : domain.max_width() / 8.0;
  t.tolerance = cfg.bisect_tol;
  t.diag_lo = domain.diag(0.0);
  t.diag_hi = domain.diag(1.0);
  t.points = sample_grid(domain, t.pitch, cfg.seed, 0);
  for (const Point& p : t.points) {
    try {
      t.values.push_back(wold_utility_value(oracle, domain, p, cfg));
      t.failures.emplace_back();
    } catch (const RepresentationFailure& e) {
      t.values.push_back(std::nullopt);
      t.failures.push_back(std::string("gap (") + e.witness().detail + ")");
    } catch (const RangeError& e) {
      t.values.push_back(std::nullopt);
      t.failures.push_back(e.what());
    }
  }
  return t;
}

void write_csv(std::ostream& out, const UtilityTable& table) {
  const std::size_t n = table.diag_lo.size();
  for (std::size_t i = 0; i < n; ++i) out << "x" << i + 1 << ",";
  out << "t\n";
  for (std::size_t k = 0; k < table.points.size(); ++k) {
    for (double v : table.points[k]) out << format_double(v) << ",";
    out << (table.values[k] ? format_double(*table.values[k]) : "fail") << "\n";
  }
}

AgreementReport verify_representation(const ComparisonOracle& oracle, const UtilityTable& table, int pair_budget,
                                      std::uint64_t seed) {
  if (table.failed_cells() > 0) throw UsageError("verify_representation: table has failed cells");
  AgreementReport r;
  if (table.points.empty()) return r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> any(0, table.points.size() - 1);
  const double tol = table.tolerance;
  for (int k = 0; k < pair_budget; ++k) {
    std::size_t i = any(rng), j = any(rng);
    double ti = *table.values[i], tj = *table.values[j];
    Comparison c = oracle.compare(table.points[i], table.points[j]);
    double excess = 0.0;
    switch (c) {
      case Comparison::Succ: excess = tj - ti - tol; break;
      case Comparison::Prec: excess = ti - tj - tol; break;
      case Comparison::Indiff: excess = std::fabs(ti - tj) - tol; break;
      case Comparison::Incomp: excess = HUGE_VAL; break;
    }
    ++r.pairs;
    if (c != Comparison::Incomp && !(excess >= 0.0 && (c == Comparison::Indiff ? excess > 0.0 : true))) {
      ++r.agreements;
      continue;
    }
    if (!r.worst || excess > r.worst->excess) r.worst = Disagreement{i, j, c, ti, tj, excess};
  }
  r.fraction = r.pairs ? static_cast<double>(r.agreements) / r.pairs : 1.0;
  return r;
}

}  // namespace relab
