#include "relab/checkers/checkers.hpp"
#include "relab/checkers/support.hpp"
#include "relab/core/errors.hpp"
#include "relab/core/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace relab {

namespace {

Path line_path(const Point& base, const std::vector<int>& coords) {
  return [base, coords](double c) {
    Point p = base;
    for (int i : coords) p[i] = c;
    return p;
  };
}

Witness gap_witness(const Point& x, const Point& base, const std::vector<int>& coords, const PathScan& scan,
                    const Path& path, std::string detail) {
  Witness w;
  w.kind = WitnessKind::SolvGap;
  w.detail = std::move(detail);
  w.points = {{"x", x}, {"base", base}};
  for (int i : coords) w.params.emplace_back("coordinate", i + 1);
  for (std::size_t k = 1; k < scan.ts.size(); ++k) {
    if (scan.cs[k] == scan.cs[k - 1]) continue;
    w.transcript.push_back({path(scan.ts[k - 1]), x, scan.cs[k - 1]});
    w.transcript.push_back({path(scan.ts[k]), x, scan.cs[k]});
    if (scan.gaps.empty() && w.points.size() == 2) {
      w.points.emplace_back("bracket_a", path(scan.ts[k - 1]));
      w.points.emplace_back("bracket_b", path(scan.ts[k]));
    }
  }
  for (const Crossing& g : scan.gaps) {
    if (w.points.size() == 2) {
      w.points.emplace_back("succ_end", g.succ_end);
      w.points.emplace_back("prec_end", g.prec_end);
      w.params.emplace_back("c_succ", g.t_succ);
      w.params.emplace_back("c_prec", g.t_prec);
    }
    w.transcript.insert(w.transcript.end(), g.evidence.begin(), g.evidence.end());
  }
  return w;
}

int scan_steps(const CheckConfig& cfg) { return static_cast<int>(std::ceil(1.0 / cfg.resolution)); }

std::vector<Point> hint_points(const Domain& domain, const Hints& hints) {
  std::vector<Point> out;
  for (const Point& h : hints.points)
    if (static_cast<int>(h.size()) == domain.dimension() && domain.contains(h)) out.push_back(h);
  for (const auto& t : hints.triples)
    for (const Point& p : t)
      if (static_cast<int>(p.size()) == domain.dimension() && domain.contains(p) &&
          std::find(out.begin(), out.end(), p) == out.end())
        out.push_back(p);
  return out;
}

// (x, base) pairs: hint pairs first, then seeded pool pairs.
class PairSource {
 public:
  PairSource(const Domain& domain, const CheckConfig& cfg, const Hints& hints, std::uint64_t salt)
      : pool_(build_pool(domain, cfg, hints)), hints_(hint_points(domain, hints)), rng_(checker_rng(cfg, salt)) {}

  std::pair<Point, Point> next() {
    std::size_t h = hints_.size();
    if (k_ < h * h) {
      std::size_t i = k_++;
      return {hints_[i / h], hints_[i % h]};
    }
    ++k_;
    std::uniform_int_distribution<std::size_t> any(0, pool_.points.size() - 1);
    return {pool_.points[any(rng_)], pool_.points[any(rng_)]};
  }

  const SamplePool& pool() const { return pool_; }

 private:
  SamplePool pool_;
  std::vector<Point> hints_;
  std::mt19937_64 rng_;
  std::size_t k_ = 0;
};

std::vector<Point> separators_for(const Domain& domain, const Point& x, const Hints& hints,
                                  const CheckConfig& cfg) {
  std::vector<Point> out = separator_ladder(domain, x, cfg.resolution);
  for (const Point& h : hint_points(domain, hints)) out.push_back(h);
  return out;
}

Verdict float_trials(const ComparisonOracle& oracle, const Domain& domain, const std::vector<int>& coords,
                     const CheckConfig& cfg, const Hints& hints, std::uint64_t salt) {
  PairSource pairs(domain, cfg, hints, salt);
  int done = 0;
  try {
    for (int attempt = 0; attempt < 20 * cfg.sample_budget && done < cfg.sample_budget; ++attempt) {
      auto [x, base] = pairs.next();
      LineTrial t = restricted_line_trial(oracle, domain, x, coords, base, cfg, separators_for(domain, x, hints, cfg));
      if (t.vacuous) continue;
      ++done;
      if (t.gap) return Verdict::violated(std::move(*t.gap), cfg.resolution);
    }
  } catch (const IncomparableFound& e) {
    return incomparable_verdict(e, cfg.resolution);
  }
  return Verdict::holds(cfg.resolution);
}

Verdict exact_trials(const ComparisonOracle& oracle, const Domain& domain, const std::vector<int>& coords,
                     const CheckConfig& cfg) {
  std::vector<ExactPoint> pool = sample_grid_exact(domain, 0.5);
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < pool.size(); ++j) order.emplace_back(i, j);
  auto rng = checker_rng(cfg, 61);
  std::shuffle(order.begin(), order.end(), rng);
  int done = 0;
  try {
    for (const auto& [i, j] : order) {
      if (done >= cfg.sample_budget) break;
      LineTrial t = restricted_line_trial_exact(oracle, domain, pool[i], coords, pool[j]);
      if (t.vacuous) continue;
      ++done;
      if (t.gap) return Verdict::violated(std::move(*t.gap), cfg.resolution);
    }
  } catch (const IncomparableFound& e) {
    return incomparable_verdict(e, cfg.resolution);
  }
  return Verdict::holds(cfg.resolution);
}

bool exact_mode(const ComparisonOracle& oracle) {
  return !oracle.has_float() && oracle.has_exact() && static_cast<bool>(oracle.exact_line_solver());
}

Verdict line_trials(const ComparisonOracle& oracle, const Domain& domain, const std::vector<int>& coords,
                    const CheckConfig& cfg, const Hints& hints, std::uint64_t salt) {
  if (exact_mode(oracle)) return exact_trials(oracle, domain, coords, cfg);
  if (!oracle.has_float()) return Verdict::inapplicable("oracle has no Float64 comparison");
  return float_trials(oracle, domain, coords, cfg, hints, salt);
}

}  // namespace

LineTrial restricted_line_trial(const ComparisonOracle& oracle, const Domain& domain, const Point& x,
                                const std::vector<int>& coords, const Point& base, const CheckConfig& cfg,
                                const std::vector<Point>& separators) {
  LineTrial out;
  const int n = domain.dimension();
  Point b0 = base, dir(n, 0.0);
  for (int i : coords) {
    if (i < 0 || i >= n) throw UsageError("coordinate index out of range");
    b0[i] = 0.0;
    dir[i] = 1.0;
  }
  auto iv = domain.line_interval(b0, dir);
  if (!iv) return out;
  Path path = line_path(b0, coords);
  Membership inside = [&domain](const Point& p) { return domain.contains(p); };
  PathScan scan = sample_path(oracle, path, iv->first, iv->second, scan_steps(cfg), x, inside);
  if (scan.outcome == PathOutcome::Empty || scan.outcome == PathOutcome::OneSided) return out;
  out.vacuous = false;
  if (scan.outcome == PathOutcome::Solved) {
    out.solved = true;
    return out;
  }
  if (oracle.segment_solver()) {
    SegmentSolve s = oracle.segment_solver()(path(iv->second), path(iv->first), x);
    if (s.status == SolveStatus::Solved) {
      out.solved = true;
      return out;
    }
    if (s.status == SolveStatus::NoSolution) {
      out.gap = gap_witness(x, base, coords, scan, path, s.reason);
      return out;
    }
  }
  resolve_scan(oracle, path, x, crossing_options(cfg), separators, scan);
  out.bisection_calls = scan.phase1_calls;
  if (scan.outcome == PathOutcome::Solved) {
    out.solved = true;
    return out;
  }
  out.gap = gap_witness(x, base, coords, scan, path, scan.gaps.front().certificate);
  return out;
}

LineTrial restricted_line_trial_exact(const ComparisonOracle& oracle, const Domain& domain, const ExactPoint& x,
                                      const std::vector<int>& coords, const ExactPoint& base) {
  LineTrial out;
  const int n = domain.dimension();
  if (coords.empty()) throw UsageError("empty coordinate set");
  double lo_d = -HUGE_VAL, hi_d = HUGE_VAL;
  for (int i : coords) {
    if (i < 0 || i >= n) throw UsageError("coordinate index out of range");
    lo_d = std::max(lo_d, domain.lo()[i]);
    hi_d = std::min(hi_d, domain.hi()[i]);
  }
  if (!(lo_d <= hi_d)) return out;
  const QSqrt2 lo{mpq_class(lo_d)}, hi{mpq_class(hi_d)};
  auto at = [&](const QSqrt2& c) {
    ExactPoint p = base;
    for (int i : coords) p[i] = c;
    return p;
  };
  ExactPoint a = at(hi), b = at(lo);
  if (!domain.contains(a) || !domain.contains(b)) return out;
  Recorder rec(oracle);
  Comparison ca = rec(a, x), cb = rec(b, x);
  if (ca == Comparison::Incomp) throw IncomparableFound{a, x};
  if (cb == Comparison::Incomp) throw IncomparableFound{b, x};
  bool bracket = (weakly_above(ca) && weakly_below(cb)) || (weakly_below(ca) && weakly_above(cb));
  if (!bracket) return out;
  out.vacuous = false;
  if (ca == Comparison::Indiff || cb == Comparison::Indiff) {
    out.solved = true;
    return out;
  }
  ExactLineSolve res = oracle.exact_line_solver()(x, coords, base, lo, hi);
  std::string reason = res.reason;
  if (res.status == SolveStatus::Solved && res.solution) {
    ExactPoint p = at(*res.solution);
    if (domain.contains(p) && rec(p, x) == Comparison::Indiff) {
      out.solved = true;
      return out;
    }
    reason = "solver answer failed verification";
  } else if (res.status == SolveStatus::Unknown) {
    out.vacuous = true;
    return out;
  }
  Witness w;
  w.kind = WitnessKind::SolvGap;
  w.detail = reason;
  w.points = {{"x", x}, {"base", base}, {"bracket_a", a}, {"bracket_b", b}};
  for (int i : coords) w.params.emplace_back("coordinate", i + 1);
  w.transcript = rec.take();
  out.gap = std::move(w);
  return out;
}

std::vector<Verdict> restricted_solvability_by_coordinate(const ComparisonOracle& oracle, const Domain& domain,
                                                          const CheckConfig& cfg, const Hints& hints) {
  cfg.validate();
  std::vector<Verdict> out;
  for (int i = 0; i < domain.dimension(); ++i) out.push_back(line_trials(oracle, domain, {i}, cfg, hints, 50 + i));
  return out;
}

Verdict check_restricted_solvability(const ComparisonOracle& oracle, const Domain& domain, const CheckConfig& cfg,
                                     const Hints& hints) {
  std::vector<Verdict> per = restricted_solvability_by_coordinate(oracle, domain, cfg, hints);
  bool any_applicable = false;
  for (Verdict& v : per) {
    if (v.is_violated()) return v;
    any_applicable = any_applicable || v.kind != VerdictKind::Inapplicable;
  }
  if (!any_applicable) return per.empty() ? Verdict::inapplicable("empty domain") : per.front();
  return Verdict::holds(cfg.resolution);
}

Verdict check_stronger_rs(const ComparisonOracle& oracle, const Domain& domain, const std::vector<int>& coords,
                          const CheckConfig& cfg, const Hints& hints) {
  cfg.validate();
  const int n = domain.dimension();
  std::vector<int> a = coords;
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  if (a.empty()) throw UsageError("stronger RS: coordinate set is empty");
  if (static_cast<int>(a.size()) >= n) throw UsageError("stronger RS: coordinate set covers every coordinate");
  for (int i : a)
    if (i < 0 || i >= n) throw UsageError("stronger RS: coordinate index out of range");
  return line_trials(oracle, domain, a, cfg, hints, 70);
}

namespace {

enum class UrsOutcome { Solved, Inconclusive, Violated };

struct UrsResult {
  UrsOutcome outcome = UrsOutcome::Inconclusive;
  std::optional<Witness> witness;
};

UrsResult urs_trial(const ComparisonOracle& oracle, const Domain& domain, const Point& x, int i, const Point& base,
                    const CheckConfig& cfg, const std::vector<Point>& separators) {
  UrsResult out;
  const int n = domain.dimension();
  Point b0 = base, dir(n, 0.0);
  b0[i] = 0.0;
  dir[i] = 1.0;
  auto clip = domain.line_interval(b0, dir);
  auto natural = domain.natural_line_interval(b0, dir);
  if (!clip || !natural) return out;
  const std::vector<int> coords{i};
  Path path = line_path(b0, coords);
  Membership inside = [&domain](const Point& p) { return domain.contains(p); };
  const CrossingOptions opts = crossing_options(cfg);
  PathScan scan = sample_path(oracle, path, clip->first, clip->second, scan_steps(cfg), x, inside);
  if (scan.outcome == PathOutcome::Empty) return out;
  if (scan.outcome == PathOutcome::Solved) {
    out.outcome = UrsOutcome::Solved;
    return out;
  }

  // Geometric extension beyond the clip box, within the natural bounds.
  const double w = std::max(clip->second - clip->first, cfg.resolution);
  struct Probe {
    double t;
    Comparison c;
  };
  std::vector<Probe> ext_hi, ext_lo;
  for (int side = 0; side < 2; ++side) {
    std::vector<Probe>& ext = side == 0 ? ext_hi : ext_lo;
    double edge = side == 0 ? scan.ts.back() : scan.ts.front();
    double limit = side == 0 ? natural->second : natural->first;
    for (int j = 0; j <= 20; ++j) {
      double t = side == 0 ? clip->second + std::ldexp(w, j) : clip->first - std::ldexp(w, j);
      bool last = side == 0 ? t >= limit : t <= limit;
      if (last) t = limit;
      if (!std::isfinite(t) || t == edge || (!ext.empty() && t == ext.back().t)) break;
      Point p = path(t);
      ext.push_back({t, compare_complete(oracle, p, x)});
      if (last) break;
    }
  }

  if (scan.outcome == PathOutcome::Bracketed) {
    resolve_scan(oracle, path, x, opts, separators, scan);
    if (scan.outcome == PathOutcome::Solved) {
      out.outcome = UrsOutcome::Solved;
      return out;
    }
    // every crossing in the clip is a gap; a solution may still lie beyond it
    for (const auto* ext : {&ext_hi, &ext_lo}) {
      Comparison edge_c = ext == &ext_hi ? scan.cs.back() : scan.cs.front();
      for (const Probe& p : *ext)
        if (p.c != edge_c) return out;
    }
    out.outcome = UrsOutcome::Violated;
    out.witness = gap_witness(x, base, coords, scan, path, scan.gaps.front().certificate);
    return out;
  }

  // One-sided on the clip: look for a sign change beyond it.
  const Comparison s = scan.side;
  for (int side = 0; side < 2; ++side) {
    const std::vector<Probe>& ext = side == 0 ? ext_hi : ext_lo;
    double prev = side == 0 ? scan.ts.back() : scan.ts.front();
    for (const Probe& p : ext) {
      if (p.c == Comparison::Indiff) {
        out.outcome = UrsOutcome::Solved;
        return out;
      }
      if (p.c != s) {
        double ts = s == Comparison::Succ ? prev : p.t;
        double tp = s == Comparison::Succ ? p.t : prev;
        Crossing cr = resolve_crossing(oracle, path, ts, tp, x, opts, separators);
        if (cr.kind != CrossingKind::Gap) {
          out.outcome = UrsOutcome::Solved;
          return out;
        }
        PathScan g;
        g.ts = {prev, p.t};
        g.cs = {s, p.c};
        g.gaps.push_back(std::move(cr));
        out.outcome = UrsOutcome::Violated;
        out.witness = gap_witness(x, base, coords, g, path, g.gaps.front().certificate);
        return out;
      }
      prev = p.t;
    }
  }

  // Plateau rule: the extreme class toward x is reached at a clip edge and persists to the outermost probe.
  Point best = path(scan.ts.front());
  auto closer = [&](const Point& p) {
    Comparison c = compare_complete(oracle, p, best);
    return s == Comparison::Prec ? c == Comparison::Succ : c == Comparison::Prec;
  };
  for (double t : scan.ts)
    if (Point p = path(t); closer(p)) best = p;
  for (const auto* ext : {&ext_hi, &ext_lo})
    for (const Probe& p : *ext)
      if (Point q = path(p.t); closer(q)) best = q;

  for (int side = 0; side < 2; ++side) {
    const std::vector<Probe>& ext = side == 0 ? ext_hi : ext_lo;
    Point edge = path(side == 0 ? scan.ts.back() : scan.ts.front());
    Point outer = ext.empty() ? edge : path(ext.back().t);
    Recorder rec(oracle);
    if (rec(outer, edge) != Comparison::Indiff || rec(outer, best) != Comparison::Indiff) continue;
    rec(edge, x);
    rec(outer, x);
    rec(best, x);
    for (const Probe& p : ext) rec.log().push_back({path(p.t), x, p.c});
    Witness wit;
    wit.kind = WitnessKind::SolvGap;
    wit.detail = std::string("plateau: line stays ") + (s == Comparison::Prec ? "below" : "above") + " x";
    wit.points = {{"x", x}, {"base", base}, {"edge", edge}, {"outer", outer}, {"extreme", best}};
    wit.params = {{"coordinate", i + 1}, {"c_edge", side == 0 ? scan.ts.back() : scan.ts.front()},
                  {"c_outer", ext.empty() ? (side == 0 ? scan.ts.back() : scan.ts.front()) : ext.back().t}};
    wit.transcript = rec.take();
    out.outcome = UrsOutcome::Violated;
    out.witness = std::move(wit);
    return out;
  }
  return out;
}

}  // namespace

Verdict check_unrestricted_solvability(const ComparisonOracle& oracle, const Domain& domain,
                                       const CheckConfig& cfg, const Hints& hints) {
  cfg.validate();
  if (!oracle.has_float()) return Verdict::inapplicable("oracle has no Float64 comparison");
  if (!domain.convex()) return Verdict::inapplicable("domain is not convex");
  const int n = domain.dimension();
  PairSource pairs(domain, cfg, hints, 80);
  const std::size_t hint_pairs = hint_points(domain, hints).size() * hint_points(domain, hints).size();
  try {
    for (int k = 0; k < cfg.sample_budget; ++k) {
      auto [x, base] = pairs.next();
      // hint pairs try every coordinate, random pairs one
      const int tries = static_cast<std::size_t>(k) < hint_pairs ? n : 1;
      for (int j = 0; j < tries; ++j) {
        UrsResult r = urs_trial(oracle, domain, x, (j + k) % n, base, cfg, separators_for(domain, x, hints, cfg));
        if (r.outcome == UrsOutcome::Violated) return Verdict::violated(std::move(*r.witness), cfg.resolution);
      }
    }
  } catch (const IncomparableFound& e) {
    return incomparable_verdict(e, cfg.resolution);
  }
  return Verdict::holds(cfg.resolution);
}

}  // namespace relab
