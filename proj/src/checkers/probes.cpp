#include "probes.hpp"

#include "relab/checkers/checkers.hpp"
#include "relab/core/errors.hpp"

namespace relab {

namespace {

std::optional<Witness> certify(const ComparisonOracle& oracle, const Point& x, const Point& limit,
                               const std::vector<Point>& seq, Side side) {
  Recorder rec(oracle);
  for (const Point& p : seq) {
    Comparison c = rec(p, x);
    if (side == Side::Upper ? !weakly_above(c) : !weakly_below(c)) return std::nullopt;
  }
  Comparison cl = rec(limit, x);
  if (cl != (side == Side::Upper ? Comparison::Prec : Comparison::Succ)) return std::nullopt;
  Witness w;
  w.kind = WitnessKind::Closure;
  w.detail = side == Side::Upper ? "upper" : "lower";
  w.points = {{"x", x}, {"limit", limit}};
  for (std::size_t k = 0; k < seq.size(); ++k) w.points.emplace_back("p" + std::to_string(k), seq[k]);
  w.transcript = rec.take();
  return w;
}

}  // namespace

std::optional<Witness> closure_counterexample(const ComparisonOracle& oracle, const Point& limit,
                                              const std::vector<Point>& seq, const std::vector<Point>& refs,
                                              bool allow_plateau) {
  constexpr std::size_t kTail = 17;
  if (seq.empty()) return std::nullopt;
  Point pmin = seq.front(), pmax = seq.front();
  bool plateau = allow_plateau;
  for (std::size_t k = 1; k < seq.size(); ++k) {
    if (k + kTail > seq.size() && compare_complete(oracle, seq[k], seq[k - 1]) != Comparison::Indiff) plateau = false;
    if (compare_complete(oracle, seq[k], pmin) == Comparison::Prec) pmin = seq[k];
    if (compare_complete(oracle, seq[k], pmax) == Comparison::Succ) pmax = seq[k];
  }
  bool upper = compare_complete(oracle, pmin, limit) == Comparison::Succ;
  bool lower = compare_complete(oracle, pmax, limit) == Comparison::Prec;
  if (!upper && !lower) return std::nullopt;
  if (plateau)
    if (auto w = certify(oracle, seq.back(), limit, seq, upper ? Side::Upper : Side::Lower)) return w;

  std::optional<Point> first_upper, first_lower;
  auto consider = [&](const Point& x) -> std::optional<Witness> {
    Comparison c = compare_complete(oracle, x, limit);
    Side side;
    std::optional<Point>* first;
    if (upper && c == Comparison::Succ && weakly_below(compare_complete(oracle, x, pmin))) {
      side = Side::Upper;
      first = &first_upper;
    } else if (lower && c == Comparison::Prec && weakly_above(compare_complete(oracle, x, pmax))) {
      side = Side::Lower;
      first = &first_lower;
    } else {
      return std::nullopt;
    }
    if (plateau) return certify(oracle, x, limit, seq, side);
    if (!*first) {
      if (certify(oracle, x, limit, seq, side)) *first = x;
      return std::nullopt;
    }
    Comparison cx = compare_complete(oracle, x, **first);
    if (cx == Comparison::Indiff) return std::nullopt;
    // witness x is the one nearer the limit, w the one beyond it
    bool x_nearer = side == Side::Upper ? cx == Comparison::Prec : cx == Comparison::Succ;
    const Point& near = x_nearer ? x : **first;
    const Point& far = x_nearer ? **first : x;
    auto w = certify(oracle, near, limit, seq, side);
    if (!w) return std::nullopt;
    Recorder rec(oracle);
    rec(far, near);
    rec(far, side == Side::Upper ? pmin : pmax);
    w->points.emplace_back("separator", far);
    for (auto& r : rec.take()) w->transcript.push_back(std::move(r));
    return w;
  };
  for (const Point& x : refs)
    if (auto w = consider(x)) return w;
  return std::nullopt;
}

namespace {

std::optional<std::vector<Point>> probe_sequence(const Domain& domain, const Point& limit, const Point& direction,
                                                 const CheckConfig& cfg) {
  if (!domain.contains(limit)) throw UsageError("probe: limit outside the domain");
  if (!domain.contains(add_scaled(limit, direction, cfg.resolution)))
    throw UsageError("probe: limit + resolution * direction outside the domain");
  std::vector<Point> seq = approach_sequence(limit, direction, cfg.resolution, cfg.refine_depth);
  for (const Point& p : seq)
    if (!domain.contains(p)) return std::nullopt;
  return seq;
}

}  // namespace

std::optional<Witness> section_closure_probe(const ComparisonOracle& oracle, const Domain& domain, const Point& x,
                                             const Point& limit, const Point& direction, Side side,
                                             const CheckConfig& cfg) {
  auto seq = probe_sequence(domain, limit, direction, cfg);
  if (!seq) return std::nullopt;
  auto w = certify(oracle, x, limit, *seq, side);
  if (w) w->points.emplace_back("direction", direction);
  return w;
}

std::optional<Witness> section_openness_probe(const ComparisonOracle& oracle, const Domain& domain, const Point& x,
                                              const Point& limit, const Point& direction, Side side,
                                              const CheckConfig& cfg) {
  auto seq = probe_sequence(domain, limit, direction, cfg);
  if (!seq) return std::nullopt;
  const Comparison inside = side == Side::Upper ? Comparison::Succ : Comparison::Prec;
  Recorder rec(oracle);
  if (rec(limit, x) != inside) return std::nullopt;
  for (const Point& p : *seq)
    if (rec(p, x) == inside) return std::nullopt;
  Witness w;
  w.kind = WitnessKind::Openness;
  w.detail = side == Side::Upper ? "upper" : "lower";
  w.points = {{"x", x}, {"y", limit}, {"direction", direction}};
  for (std::size_t k = 0; k < seq->size(); ++k) w.points.emplace_back("p" + std::to_string(k), (*seq)[k]);
  w.transcript = rec.take();
  return w;
}

}  // namespace relab
