#include "relab/checkers/support.hpp"

#include <cmath>

namespace relab {

namespace {

// Last `window` moves of one side, with repeated points dropped.
std::vector<Point> recent(const std::vector<Point>& hist, int window) {
  std::size_t from = hist.size() > static_cast<std::size_t>(window) + 1 ? hist.size() - window - 1 : 0;
  return {hist.begin() + static_cast<std::ptrdiff_t>(from), hist.end()};
}

bool all_indifferent(Recorder& rec, const std::vector<Point>& h) {
  for (std::size_t k = 1; k < h.size(); ++k)
    if (rec(h[k], h[k - 1]) != Comparison::Indiff) return false;
  return true;
}

// Later entries move toward the target: downward on the Succ side, upward on the Prec side.
bool monotone(Recorder& rec, const std::vector<Point>& h, bool succ_side) {
  for (std::size_t k = 1; k < h.size(); ++k) {
    Comparison c = rec(h[k], h[k - 1]);
    if (succ_side ? !weakly_below(c) : !weakly_above(c)) return false;
  }
  return true;
}

}  // namespace

Crossing resolve_crossing(const ComparisonOracle& oracle, const Path& path, double t_succ, double t_prec,
                          const Point& target, const CrossingOptions& opts, const std::vector<Point>& separators) {
  Crossing out;
  std::vector<Point> succ_hist{path(t_succ)};
  std::vector<Point> prec_hist{path(t_prec)};
  int calls = 0;
  bool phase1 = true;
  while (calls < opts.max_iter) {
    if (phase1 && !(std::fabs(t_succ - t_prec) > opts.tol)) {
      phase1 = false;
      out.phase1_calls = calls;
    }
    double mid = t_succ + (t_prec - t_succ) / 2.0;
    if (mid == t_succ || mid == t_prec) break;
    Point p = path(mid);
    Comparison c = compare_complete(oracle, p, target);
    ++calls;
    if (c == Comparison::Indiff) {
      out.kind = CrossingKind::Indifferent;
      out.t = mid;
      out.t_succ = out.t_prec = mid;
      out.succ_end = out.prec_end = p;
      out.calls = calls;
      if (phase1) out.phase1_calls = calls;
      out.evidence.push_back({p, target, c});
      return out;
    }
    std::vector<Point>& hist = c == Comparison::Succ ? succ_hist : prec_hist;
    (c == Comparison::Succ ? t_succ : t_prec) = mid;
    if (p != hist.back()) hist.push_back(std::move(p));
  }
  if (phase1) out.phase1_calls = calls;
  out.calls = calls;
  out.t_succ = t_succ;
  out.t_prec = t_prec;
  out.t = t_succ + (t_prec - t_succ) / 2.0;
  out.succ_end = succ_hist.back();
  out.prec_end = prec_hist.back();

  Recorder rec(oracle);
  rec(out.succ_end, target);
  rec(out.prec_end, target);
  std::vector<Point> s_recent = recent(succ_hist, opts.window);
  std::vector<Point> p_recent = recent(prec_hist, opts.window);
  std::size_t base = rec.log().size();
  if (all_indifferent(rec, s_recent) && all_indifferent(rec, p_recent)) {
    out.kind = CrossingKind::Gap;
    out.certificate = "stable";
    out.evidence = rec.take();
    return out;
  }
  rec.log().resize(base);
  if (monotone(rec, s_recent, true) && monotone(rec, p_recent, false)) {
    for (const Point& w : separators) {
      Comparison cw = compare_complete(oracle, w, target);
      if (cw == Comparison::Succ && weakly_below(compare_complete(oracle, w, out.succ_end))) {
        rec(w, target);
        rec(w, out.succ_end);
      } else if (cw == Comparison::Prec && weakly_above(compare_complete(oracle, w, out.prec_end))) {
        rec(w, target);
        rec(w, out.prec_end);
      } else {
        continue;
      }
      out.kind = CrossingKind::Gap;
      out.certificate = "separator";
      out.evidence = rec.take();
      return out;
    }
  }
  out.kind = CrossingKind::Crossing;
  out.evidence = rec.take();
  return out;
}

PathScan sample_path(const ComparisonOracle& oracle, const Path& path, double t0, double t1, int steps,
                     const Point& target, const Membership& inside) {
  PathScan out;
  for (int k = 0; k <= steps; ++k) {
    double t = k == steps ? t1 : t0 + (t1 - t0) * (static_cast<double>(k) / steps);
    Point p = path(t);
    if (inside && !inside(p)) continue;
    Comparison c = compare_complete(oracle, p, target);
    out.ts.push_back(t);
    out.cs.push_back(c);
    if (c == Comparison::Indiff) {
      out.outcome = PathOutcome::Solved;
      out.t = t;
      out.has_above = out.has_below = true;
      return out;
    }
    (c == Comparison::Succ ? out.has_above : out.has_below) = true;
  }
  if (out.ts.empty()) return out;
  if (!(out.has_above && out.has_below)) {
    out.outcome = PathOutcome::OneSided;
    out.side = out.cs.front();
    return out;
  }
  out.outcome = PathOutcome::Bracketed;
  return out;
}

void resolve_scan(const ComparisonOracle& oracle, const Path& path, const Point& target, const CrossingOptions& opts,
                  const std::vector<Point>& separators, PathScan& scan, int max_crossings) {
  if (scan.outcome != PathOutcome::Bracketed) return;
  int resolved = 0;
  for (std::size_t k = 1; k < scan.ts.size(); ++k) {
    if (scan.cs[k] == scan.cs[k - 1]) continue;
    if (resolved++ >= max_crossings) {
      scan.outcome = PathOutcome::Solved;
      return;
    }
    bool succ_first = scan.cs[k - 1] == Comparison::Succ;
    double ts = succ_first ? scan.ts[k - 1] : scan.ts[k];
    double tp = succ_first ? scan.ts[k] : scan.ts[k - 1];
    Crossing cr = resolve_crossing(oracle, path, ts, tp, target, opts, separators);
    if (resolved == 1) scan.phase1_calls = cr.phase1_calls;
    if (cr.kind != CrossingKind::Gap) {
      scan.outcome = PathOutcome::Solved;
      scan.t = cr.t;
      return;
    }
    scan.gaps.push_back(std::move(cr));
  }
  scan.outcome = PathOutcome::Missed;
}

PathScan scan_path(const ComparisonOracle& oracle, const Path& path, double t0, double t1, int steps,
                   const Point& target, const CrossingOptions& opts, const Membership& inside,
                   const std::vector<Point>& separators, int max_crossings) {
  PathScan out = sample_path(oracle, path, t0, t1, steps, target, inside);
  resolve_scan(oracle, path, target, opts, separators, out, max_crossings);
  return out;
}

}  // namespace relab
