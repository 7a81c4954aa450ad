#include "relab/core/errors.hpp"
#include "relab/core/fixture.hpp"
#include "relab/representation/representation.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace relab;

namespace {

const CheckConfig kCfg;
const Domain kBox = Domain::box(2, 0, 2);

}  // namespace

TEST_CASE("solve on a segment") {
  Fixture lin = make_linear_sum(2, kBox);
  SegmentResult r = solve_indifference_on_segment(lin.oracle, {1, 0.5}, {2, 2}, {0, 0}, kCfg);
  REQUIRE(std::holds_alternative<IndiffCertificate>(r));
  const auto& c = std::get<IndiffCertificate>(r);
  // 4 lambda = 1.5.
  CHECK(std::fabs(c.lambda - 0.375) <= 1e-12);
  CHECK(c.point[0] == doctest::Approx(0.75));
  CHECK(c.point[1] == doctest::Approx(0.75));
  CHECK(c.iterations <= 200);
  CHECK(weakly_above(lin.oracle.compare(c.upper, Point{1, 0.5})));
  CHECK(weakly_below(lin.oracle.compare(c.lower, Point{1, 0.5})));

  SegmentResult same = solve_indifference_on_segment(lin.oracle, {2, 2}, {2, 2}, {0, 0}, kCfg);
  REQUIRE(std::holds_alternative<IndiffCertificate>(same));
  CHECK(std::get<IndiffCertificate>(same).lambda == 1.0);
  CHECK(std::get<IndiffCertificate>(same).iterations == 0);

  CHECK_THROWS_AS(solve_indifference_on_segment(lin.oracle, {5, 5}, {2, 2}, {0, 0}, kCfg), UsageError);
}

TEST_CASE("lexicographic segment has a gap") {
  Fixture lex = fixture("lex");
  SegmentResult r = solve_indifference_on_segment(lex.oracle, {1.0 / 3.0, 0}, {0.5, 1}, {0, 1}, kCfg);
  REQUIRE(std::holds_alternative<Witness>(r));
  const Witness& w = std::get<Witness>(r);
  CHECK(w.kind == WitnessKind::SolvGap);
  CHECK(replay(w, lex.oracle).ok);
}

TEST_CASE("wold utility values") {
  Fixture lin = make_linear_sum(2, kBox);
  CHECK(std::fabs(wold_utility_value(lin.oracle, kBox, {1, 0.5}, kCfg) - 0.375) <= 1e-12);
  CHECK(wold_utility_value(lin.oracle, kBox, {0, 0}, kCfg) == 0.0);
  Fixture mn = make_min_util(2, kBox);
  // min(diag(t)) = 2t = min(1.2, 0.4).
  CHECK(std::fabs(wold_utility_value(mn.oracle, kBox, {1.2, 0.4}, kCfg) - 0.2) <= 1e-12);

  Domain small = Domain::box(2, 0, 1);
  CHECK_THROWS_AS(wold_utility_value(lin.oracle, small, {1.5, 1.5}, kCfg), RangeError);
}

TEST_CASE("utility table") {
  Fixture lin = make_linear_sum(2, kBox);
  UtilityTable t = build_utility_table(lin.oracle, kBox, kCfg, 0.5);
  REQUIRE(t.points.size() == 25);
  CHECK(t.failed_cells() == 0);
  for (std::size_t k = 0; k < t.points.size(); ++k) {
    double want = (t.points[k][0] + t.points[k][1]) / 4;
    CHECK(std::fabs(*t.values[k] - want) <= 1e-12);
  }
  std::ostringstream csv;
  write_csv(csv, t);
  std::string text = csv.str();
  CHECK(text.rfind("x1,x2,t\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 26);

  auto zero = ComparisonOracle::from_utility("zero", 2, [](const Point&) { return 0.0; });
  UtilityTable z = build_utility_table(zero, kBox, kCfg, 1.0);
  for (const auto& v : z.values) CHECK(v == 0.0);
}

TEST_CASE("an isolated value off the diagonal leaves a gap cell") {
  // step_jump takes 0.5 only at (1,0); the diagonal takes 0.4 and 0.6.
  Fixture sj = fixture("step_jump");
  UtilityTable t = build_utility_table(sj.oracle, kBox, kCfg, 0.25);
  REQUIRE(t.failed_cells() == 1);
  for (std::size_t k = 0; k < t.points.size(); ++k)
    if (!t.values[k]) {
      CHECK(t.points[k] == Point{1, 0});
      CHECK(t.failures[k].find("gap") == 0);
    }
  std::ostringstream csv;
  write_csv(csv, t);
  CHECK(csv.str().find("1,0,fail\n") != std::string::npos);
  CHECK_THROWS_AS(verify_representation(sj.oracle, t, 10, 0), UsageError);
}

TEST_CASE("step_bounded values are all reached on the diagonal") {
  Fixture sb = fixture("step_bounded");
  UtilityTable t = build_utility_table(sb.oracle, kBox, kCfg, 0.25);
  CHECK(t.failed_cells() == 0);
  CHECK(verify_representation(sb.oracle, t, 500, 1).fraction == 1.0);
}

TEST_CASE("agreement") {
  for (auto make : {make_linear_sum, make_min_util}) {
    Fixture f = make(2, kBox);
    UtilityTable t = build_utility_table(f.oracle, kBox, kCfg, 0.5);
    AgreementReport r = verify_representation(f.oracle, t, 1000, 3);
    CHECK(r.pairs == 1000);
    CHECK(r.fraction == 1.0);
    CHECK_FALSE(r.worst);
    // Independent oracle: the exhaustive pair check on the grid.
    for (std::size_t i = 0; i < t.points.size(); ++i)
      for (std::size_t j = 0; j < t.points.size(); ++j) {
        Comparison c = f.oracle.compare(t.points[i], t.points[j]);
        double d = *t.values[i] - *t.values[j];
        if (c == Comparison::Succ) CHECK(d > -1e-12);
        if (c == Comparison::Prec) CHECK(d < 1e-12);
        if (c == Comparison::Indiff) CHECK(std::fabs(d) <= 1e-12);
      }
  }
}

TEST_CASE("a corrupted cell is reported") {
  Fixture lin = make_linear_sum(2, kBox);
  UtilityTable t = build_utility_table(lin.oracle, kBox, kCfg, 0.5);
  t.values[7] = 0.99;
  AgreementReport r = verify_representation(lin.oracle, t, 1000, 3);
  CHECK(r.fraction < 1.0);
  REQUIRE(r.worst);
  CHECK((r.worst->i == 7 || r.worst->j == 7));
}
