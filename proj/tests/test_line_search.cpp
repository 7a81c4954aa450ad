#include "relab/checkers/config.hpp"
#include "relab/checkers/support.hpp"

#include <doctest.h>

#include <cmath>

using namespace relab;

namespace {

ComparisonOracle sum_oracle(int n) {
  return ComparisonOracle::from_utility("sum", n, [](const Point& x) {
    double s = 0;
    for (double v : x) s += v;
    return s;
  });
}

}  // namespace

TEST_CASE("resolve_crossing on a continuous path hits or brackets the solution") {
  ComparisonOracle o = sum_oracle(2);
  Path path = [](double t) { return Point{2 * t, 2 * t}; };
  CheckConfig cfg;
  Crossing c = resolve_crossing(o, path, 1.0, 0.0, Point{1, 0.5}, crossing_options(cfg), {});
  CHECK(c.kind != CrossingKind::Gap);
  CHECK(std::fabs(c.t - 0.375) <= 1e-12);
  CHECK(c.calls <= 200);
}

TEST_CASE("resolve_crossing certifies a jump only with evidence") {
  // u = x1 + x2 plus 1 once x1 >= 0.5; along (t, 0) the values skip (0.5, 1.5).
  auto jump = ComparisonOracle::from_utility("jump", 2, [](const Point& x) {
    return x[0] + x[1] + (x[0] >= 0.5 ? 1.0 : 0.0);
  });
  Path path = [](double t) { return Point{t, 0}; };
  const Point target{0.25, 0.5};
  CrossingOptions opts = crossing_options(CheckConfig{});

  Crossing bare = resolve_crossing(jump, path, 1.0, 0.0, target, opts, {});
  CHECK(bare.kind == CrossingKind::Crossing);
  CHECK(bare.t == doctest::Approx(0.5));

  Crossing sep = resolve_crossing(jump, path, 1.0, 0.0, target, opts, {Point{0.25, 0.6}});
  CHECK(sep.kind == CrossingKind::Gap);
  CHECK(sep.certificate == "separator");

  // A plateau on both sides is stable without a separator.
  auto step = ComparisonOracle::from_utility("step", 2, [](const Point& x) { return x[0] >= 0.5 ? 2.0 : 0.0; });
  Crossing stable = resolve_crossing(step, path, 1.0, 0.0, Point{0.5, 0.5}, opts, {});
  CHECK(stable.kind == CrossingKind::Indifferent);
  auto step1 = ComparisonOracle::from_utility("step1", 2, [](const Point& x) {
    return x[0] >= 0.5 ? 2.0 : x[1] > 0 ? 1.0 : 0.0;
  });
  Crossing gap = resolve_crossing(step1, path, 1.0, 0.0, Point{0, 1}, opts, {});
  CHECK(gap.kind == CrossingKind::Gap);
  CHECK(gap.certificate == "stable");
}

TEST_CASE("sample_path classifies paths") {
  ComparisonOracle o = sum_oracle(1);
  Path path = [](double t) { return Point{t}; };
  PathScan above = sample_path(o, path, 0.0, 1.0, 10, Point{-1}, {});
  CHECK(above.outcome == PathOutcome::OneSided);
  CHECK(above.side == Comparison::Succ);
  PathScan hit = sample_path(o, path, 0.0, 1.0, 10, Point{0.5}, {});
  CHECK(hit.outcome == PathOutcome::Solved);
  PathScan br = sample_path(o, path, 0.0, 1.0, 10, Point{0.55}, {});
  CHECK(br.outcome == PathOutcome::Bracketed);
  resolve_scan(o, path, Point{0.55}, crossing_options(CheckConfig{}), {}, br, 4);
  CHECK(br.outcome == PathOutcome::Solved);
}
