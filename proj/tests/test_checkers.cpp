#include "relab/checkers/checkers.hpp"
#include "relab/core/errors.hpp"
#include "relab/core/fixture.hpp"
#include "relab/core/properties.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace relab;

namespace {

const CheckConfig kCfg;

void check_replays(const Verdict& v, const ComparisonOracle& o) {
  if (!v.is_violated()) return;
  REQUIRE(v.witness);
  CHECK(!v.witness->transcript.empty());
  ReplayResult r = replay(*v.witness, o);
  CHECK(r.ok);
}

bool point_is(const Witness& w, std::string_view role, const Point& want) {
  const AnyPoint* p = w.point(role);
  return p && std::holds_alternative<Point>(*p) && std::get<Point>(*p) == want;
}

}  // namespace

TEST_CASE("basic properties") {
  Fixture lex = fixture("lex");
  CHECK(check_order_density(lex.oracle, lex.domain, kCfg, lex.hints).is_holds());
  Fixture step = fixture("step_jump");
  Verdict dense = check_order_density(step.oracle, step.domain, kCfg, step.hints);
  CHECK(dense.is_violated());
  check_replays(dense, step.oracle);
  Fixture lin = fixture("linear_sum");
  for (const auto& [k, v] : check_basic(lin.oracle, lin.domain, kCfg, lin.hints)) {
    INFO(k);
    CHECK(v.is_holds());
  }
}

TEST_CASE("incomparable pairs fail completeness") {
  ComparisonOracle partial("partial", 1, [](const Point& a, const Point& b) {
    if (a[0] < 0.5 && b[0] >= 0.5) return Comparison::Incomp;
    if (b[0] < 0.5 && a[0] >= 0.5) return Comparison::Incomp;
    return a[0] > b[0] ? Comparison::Succ : a[0] < b[0] ? Comparison::Prec : Comparison::Indiff;
  });
  Verdict v = check_completeness(partial, Domain::box(1, 0, 1), kCfg);
  CHECK(v.is_violated());
  check_replays(v, partial);
}

TEST_CASE("section closure probe") {
  Fixture gp2 = fixture("gp2");
  const double r = 1.0 / std::sqrt(2.0);
  auto w = section_closure_probe(gp2.oracle, gp2.domain, {3, 1}, {0, 0}, {r, r}, Side::Upper, kCfg);
  REQUIRE(w);
  CHECK(w->kind == WitnessKind::Closure);
  CHECK(replay(*w, gp2.oracle).ok);

  Fixture lin = fixture("linear_sum");
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coord(-5, 5), angle(0, 6.283185307179586);
  for (int k = 0; k < 50; ++k) {
    Point x{coord(rng), coord(rng)}, limit{coord(rng), coord(rng)};
    double a = angle(rng);
    Point dir{std::cos(a), std::sin(a)};
    for (Side s : {Side::Upper, Side::Lower})
      CHECK_FALSE(section_closure_probe(lin.oracle, lin.domain, x, limit, dir, s, kCfg));
  }

  Fixture sr = fixture("sin_reciprocal");
  const double xbar = 1.0 / (1.5707963267948966 + 1e-3);
  CHECK(std::sin(1.0 / xbar) < 1.0);
  auto ws = section_closure_probe(sr.oracle, sr.domain, {xbar}, {0}, {1}, Side::Lower, kCfg);
  REQUIRE(ws);
  CHECK(replay(*ws, sr.oracle).ok);
}

TEST_CASE("continuity") {
  Fixture gp2 = fixture("gp2");
  Verdict v = check_continuity(gp2.oracle, gp2.domain, kCfg, gp2.hints);
  REQUIRE(v.is_violated());
  CHECK(v.witness->kind == WitnessKind::Closure);
  CHECK(point_is(*v.witness, "limit", {0, 0}));
  const AnyPoint* dir = v.witness->point("direction");
  REQUIRE(dir);
  const Point& d = std::get<Point>(*dir);
  CHECK(std::fabs(d[0]) == doctest::Approx(std::fabs(d[1])));
  check_replays(v, gp2.oracle);

  Fixture proj = fixture("projection");
  CHECK(check_continuity(proj.oracle, proj.domain, kCfg, proj.hints).is_holds());
  Fixture dj = fixture("diagonal_jump");
  Verdict vd = check_continuity(dj.oracle, dj.domain, kCfg, dj.hints);
  CHECK(vd.is_violated());
  check_replays(vd, dj.oracle);
}

TEST_CASE("separate continuity") {
  Fixture gp2 = fixture("gp2");
  CHECK(check_separate_continuity(gp2.oracle, gp2.domain, kCfg, gp2.hints).is_holds());
  Fixture sb = fixture("step_bounded");
  Verdict v = check_separate_continuity(sb.oracle, sb.domain, kCfg, sb.hints);
  CHECK(v.is_violated());
  check_replays(v, sb.oracle);
  Fixture dj = fixture("diagonal_jump");
  CHECK(check_separate_continuity(dj.oracle, dj.domain, kCfg, dj.hints).is_holds());
}

TEST_CASE("mixture continuity") {
  Fixture sr = fixture("sin_reciprocal");
  Verdict v = check_mixture_continuity(sr.oracle, sr.domain, kCfg, sr.hints);
  CHECK(v.is_violated());
  check_replays(v, sr.oracle);
  Fixture gp2 = fixture("gp2");
  Verdict g = check_mixture_continuity(gp2.oracle, gp2.domain, kCfg, gp2.hints);
  CHECK(g.is_violated());
  check_replays(g, gp2.oracle);

  // Independent oracle: for the sum, {lambda : sum(lambda a + (1-lambda) b) >= sum(c)} is
  // {lambda : lambda (A - B) >= C - B}, a closed interval.
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int k = 0; k < 200; ++k) {
    double A = u(rng), B = u(rng), C = u(rng);
    double lo = 2, hi = -1;
    for (int j = 0; j <= 1000; ++j) {
      double l = j / 1000.0;
      if (l * A + (1 - l) * B >= C) {
        lo = std::min(lo, l);
        hi = std::max(hi, l);
      }
    }
    if (hi < lo) continue;
    CHECK((lo == 0.0 || hi == 1.0));
  }
  Fixture lin = fixture("linear_sum");
  CHECK(check_mixture_continuity(lin.oracle, lin.domain, kCfg, lin.hints).is_holds());
}

TEST_CASE("archimedean") {
  Fixture sb = fixture("step_bounded");
  Verdict v = check_archimedean(sb.oracle, sb.domain, kCfg, sb.hints);
  REQUIRE(v.is_violated());
  CHECK(v.witness->kind == WitnessKind::ArchScan);
  check_replays(v, sb.oracle);
  Fixture sr = fixture("sin_reciprocal");
  CHECK(check_archimedean(sr.oracle, sr.domain, kCfg, sr.hints).is_holds());
  Fixture gp2 = fixture("gp2");
  Verdict g = check_archimedean(gp2.oracle, gp2.domain, kCfg, gp2.hints);
  CHECK(g.is_violated());
  check_replays(g, gp2.oracle);
}

TEST_CASE("weak Wold and Wold") {
  Fixture lex = fixture("lex");
  Verdict ww = check_weak_wold(lex.oracle, lex.domain, kCfg, lex.hints);
  CHECK(ww.is_violated());
  check_replays(ww, lex.oracle);
  Verdict w = check_wold(lex.oracle, lex.domain, kCfg, lex.hints);
  CHECK(w.is_violated());
  check_replays(w, lex.oracle);

  Fixture lin = fixture("linear_sum");
  CHECK(check_weak_wold(lin.oracle, lin.domain, kCfg, lin.hints).is_holds());
  CHECK(check_wold(lin.oracle, lin.domain, kCfg, lin.hints).is_holds());

  Fixture gp2 = fixture("gp2");
  Verdict g = check_weak_wold(gp2.oracle, gp2.domain, kCfg, gp2.hints);
  CHECK(g.is_violated());
  check_replays(g, gp2.oracle);

  Fixture sr = fixture("sin_reciprocal");
  CHECK(check_wold(sr.oracle, sr.domain, kCfg, sr.hints).is_holds());
}

TEST_CASE("supplied curves must stay in the domain") {
  Fixture lin = fixture("linear_sum");
  CurveFamily outside = [](const Point& x, const Point& y, std::uint64_t) {
    return std::vector<Curve>{{"escape",
                               [x, y](double t) {
                                 Point p = mixture(y, x, t);
                                 p[0] += 100 * t * (1 - t);
                                 return p;
                               },
                               true}};
  };
  CHECK_THROWS_AS(check_wold(lin.oracle, lin.domain, outside, kCfg, lin.hints), ConfigError);
}

TEST_CASE("restricted solvability") {
  Fixture sq = fixture("sqrt2_gap");
  std::vector<Verdict> per = restricted_solvability_by_coordinate(sq.oracle, sq.domain, kCfg, sq.hints);
  REQUIRE(per.size() == 2);
  CHECK(per[0].is_holds());
  REQUIRE(per[1].is_violated());
  CHECK(per[1].witness->kind == WitnessKind::SolvGap);
  check_replays(per[1], sq.oracle);
  // The certificate is exact: every recorded comparison is between points of Q(sqrt2).
  for (const ComparisonRecord& r : per[1].witness->transcript) CHECK(std::holds_alternative<ExactPoint>(r.a));

  LineTrial t = restricted_line_trial_exact(sq.oracle, sq.domain, {QSqrt2::sqrt2(), QSqrt2(0)}, {1},
                                            {QSqrt2(0), QSqrt2(0)});
  CHECK_FALSE(t.vacuous);
  CHECK_FALSE(t.solved);
  CHECK(t.gap);

  Fixture gp2 = fixture("gp2");
  CHECK(check_restricted_solvability(gp2.oracle, gp2.domain, kCfg, gp2.hints).is_holds());
  Fixture rl = fixture("rational_line");
  Verdict v = check_restricted_solvability(rl.oracle, rl.domain, kCfg, rl.hints);
  CHECK(v.is_violated());
  check_replays(v, rl.oracle);
}

TEST_CASE("restricted line trial bisects within the call budget") {
  Fixture lin = fixture("linear_sum");
  LineTrial t = restricted_line_trial(lin.oracle, lin.domain, {1, 0.5}, {1}, {0.25, 0}, kCfg);
  CHECK_FALSE(t.vacuous);
  CHECK(t.solved);
  CHECK(t.bisection_calls <= 200);
}

TEST_CASE("unrestricted solvability") {
  Fixture proj = fixture("projection");
  Verdict v = check_unrestricted_solvability(proj.oracle, proj.domain, kCfg, proj.hints);
  CHECK(v.is_violated());
  check_replays(v, proj.oracle);
  Fixture lin = fixture("linear_sum");
  CHECK(check_unrestricted_solvability(lin.oracle, lin.domain, kCfg, lin.hints).is_holds());
  Fixture gp2 = fixture("gp2");
  CHECK(check_unrestricted_solvability(gp2.oracle, gp2.domain, kCfg, gp2.hints).is_violated());
}

TEST_CASE("stronger restricted solvability") {
  Fixture lin3 = make_linear_sum(3, Domain::box(3, -10, 10, true));
  CHECK(check_stronger_rs(lin3.oracle, lin3.domain, {0, 1}, kCfg, lin3.hints).is_holds());
  Fixture sb = fixture("step_bounded");
  CHECK(check_stronger_rs(sb.oracle, sb.domain, {0}, kCfg, sb.hints).is_holds());
  Fixture lex = fixture("lex");
  Verdict v = check_stronger_rs(lex.oracle, lex.domain, {0}, kCfg, lex.hints);
  CHECK(v.is_violated());
  check_replays(v, lex.oracle);
  CHECK_THROWS_AS(check_stronger_rs(lin3.oracle, lin3.domain, {}, kCfg), UsageError);
  CHECK_THROWS_AS(check_stronger_rs(lin3.oracle, lin3.domain, {0, 1, 2}, kCfg), UsageError);
  CHECK_THROWS_AS(check_stronger_rs(lin3.oracle, lin3.domain, {5}, kCfg), UsageError);
}

TEST_CASE("verdicts are deterministic") {
  Fixture gp2 = fixture("gp2");
  Verdict a = check_continuity(gp2.oracle, gp2.domain, kCfg, gp2.hints);
  Verdict b = check_continuity(gp2.oracle, gp2.domain, kCfg, gp2.hints);
  REQUIRE(a.witness);
  REQUIRE(b.witness);
  CHECK(a.witness->points.size() == b.witness->points.size());
  CHECK(a.witness->transcript.size() == b.witness->transcript.size());
}

TEST_CASE("config validation") {
  CheckConfig c;
  c.resolution = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = CheckConfig{};
  c.sample_budget = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
}
