#include "relab/core/errors.hpp"
#include "relab/core/fixture.hpp"
#include "relab/core/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

namespace relab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr VerdictKind H = VerdictKind::Holds;
constexpr VerdictKind V = VerdictKind::Violated;

using Expected = std::vector<std::pair<std::string, VerdictKind>>;

Domain unbounded(const Domain& d) {
  return d.with_natural_bounds(Point(d.dimension(), -kInf), Point(d.dimension(), kInf));
}

AssumptionProfile monotone_profile(int n, bool interior) {
  AssumptionProfile p;
  p.weakly_monotone = true;
  p.monotone_coordinate_count = n;
  p.order_dense = true;
  p.convex_upper_sections = true;
  p.order_bounded = true;
  p.strong_order_bounded = interior;
  p.interior = interior;
  p.dimension = n;
  return p;
}

Fixture make(std::string name, ComparisonOracle oracle, Domain domain, AssumptionProfile profile, Expected expected,
             std::string notes) {
  profile.validate();
  return Fixture{std::move(name), std::move(oracle), std::move(domain), profile, std::move(expected),
                 std::move(notes), {}, {}};
}

double gp2_utility(const Point& x) {
  double m = std::max(std::fabs(x[0]), std::fabs(x[1]));
  if (m == 0.0) return 0.0;
  double a = x[0] / m, b = x[1] / m;
  return a * b / (a * a + b * b);
}

Fixture gp2() {
  auto domain = unbounded(Domain::box(2, -4, 4, true));
  AssumptionProfile p;
  p.order_dense = true;
  p.order_bounded = true;
  p.strong_order_bounded = true;
  p.interior = true;
  p.dimension = 2;
  Fixture f = make("gp2", ComparisonOracle::from_utility("gp2", 2, gp2_utility), domain, p,
                   {{"separate", H},
                    {"continuity", V},
                    {"mixture", V},
                    {"weak_wold", V},
                    {"wold", V},
                    {"archimedean", V},
                    {"unrestricted_solvability", V},
                    {"restricted_solvability", H}},
                   "f = x1 x2 / (x1^2 + x2^2), f(0,0) = 0, on R^2 sampled in (-4,4)^2");
  f.hints.points = {{0, 0}, {1, 1}, {3, 1}};
  f.hints.directions = {{M_SQRT1_2, M_SQRT1_2}};
  f.hints.triples = {{Point{1, 1}, Point{3, 1}, Point{0, 0}}, {Point{0, 0}, Point{1, 1}, Point{1, 1}}};
  return f;
}

Fixture lex() {
  auto domain = unbounded(Domain::box(2, -10, 10, true));
  auto cmp = [](const Point& a, const Point& b) {
    if (a[0] != b[0]) return a[0] > b[0] ? Comparison::Succ : Comparison::Prec;
    if (a[1] != b[1]) return a[1] > b[1] ? Comparison::Succ : Comparison::Prec;
    return Comparison::Indiff;
  };
  Fixture f = make("lex", ComparisonOracle("lex", 2, cmp), domain, monotone_profile(2, true),
                   {{"order_dense", H},
                    {"weak_wold", V},
                    {"wold", V},
                    {"continuity", V},
                    {"separate", V},
                    {"mixture", V}},
                   "lexicographic order on R^2 sampled in (-10,10)^2");
  f.hints.points = {{0.5, 1}, {1.0 / 3.0, 0}, {0, 1}};
  f.hints.triples = {{Point{0.5, 1}, Point{1.0 / 3.0, 0}, Point{0, 1}}};
  f.stronger_rs_coords = {0};
  return f;
}

double step_jump_utility(const Point& x) {
  if (x[0] == 1.0 && x[1] == 0.0) return 0.5;
  return x[0] + x[1] <= 1.0 ? 0.4 : 0.6;
}

Fixture step_jump() {
  AssumptionProfile p = monotone_profile(2, false);
  p.order_dense = false;
  Fixture f = make("step_jump", ComparisonOracle::from_utility("step_jump", 2, step_jump_utility),
                   Domain::box(2, 0, 2), p, {{"order_dense", V}, {"wold", V}, {"weak_wold", V}},
                   "0.4 below x1+x2=1 except 0.5 at (1,0), 0.6 above; on [0,2]^2");
  f.hints.points = {{1, 0}, {0, 0}, {2, 0}, {0.5, 0.5}};
  f.hints.triples = {{Point{2, 0}, Point{1, 0}, Point{0, 0}}};
  return f;
}

Fixture projection() {
  auto domain = unbounded(Domain::box(2, -10, 10, true));
  Fixture f = make("projection", ComparisonOracle::from_utility("projection", 2, [](const Point& x) { return x[1]; }),
                   domain, monotone_profile(2, true), {{"continuity", H}, {"unrestricted_solvability", V}},
                   "f = x2 on R^2 sampled in (-10,10)^2");
  f.hints.points = {{2, 2}, {0, 1}};
  return f;
}

double step_bounded_utility(const Point& x) {
  double s = x[0] + x[1];
  if (s < 1.0) return 0.0;
  if (s == 1.0) return 0.8;
  return 1.0;
}

Fixture step_bounded() {
  AssumptionProfile p = monotone_profile(2, false);
  p.order_dense = false;
  Fixture f = make("step_bounded", ComparisonOracle::from_utility("step_bounded", 2, step_bounded_utility),
                   unbounded(Domain::box(2, 0, 2)), p,
                   {{"restricted_solvability", H},
                    {"unrestricted_solvability", H},
                    {"separate", V},
                    {"continuity", V},
                    {"archimedean", V},
                    {"order_dense", V}},
                   "0 below x1+x2=1, 0.8 on it, 1 above; sampled on [0,2]^2, lines extend over R^2");
  f.hints.points = {{1, 0}, {0.5, 0.5}, {0.6, 0.4}, {0.6, 0.5}};
  f.hints.triples = {{Point{0.6, 0.5}, Point{0.6, 0.4}, Point{0.6, 0.5}}};
  f.stronger_rs_coords = {0};
  return f;
}

constexpr double kSinPeak = 0.6366;  // sin(1/0.6366) is within 5e-9 of 1

double sin_reciprocal_utility(const Point& x) { return x[0] == 0.0 ? 1.0 : std::sin(1.0 / x[0]); }

Fixture sin_reciprocal() {
  AssumptionProfile p;
  p.order_dense = true;
  p.order_bounded = true;
  p.dimension = 1;
  Domain d = Domain::box(1, 0, 4).with_natural_bounds({0}, {kInf});
  Fixture f = make("sin_reciprocal", ComparisonOracle::from_utility("sin_reciprocal", 1, sin_reciprocal_utility), d,
                   p,
                   {{"wold", H}, {"archimedean", H}, {"continuity", V}, {"mixture", V}, {"separate", V}},
                   "f(x) = sin(1/x) for x > 0, f(0) = 1, on [0,4]");
  f.hints.points = {{0}, {kSinPeak}};
  return f;
}

// Value of the rational-line relation: a rational number, or sin(1/arg) kept symbolic.
struct LineValue {
  bool tagged;
  double v;  // rational value, or the argument of the tagged irrational
};

LineValue rational_line_value(const Point& x) {
  if (x[1] > 0.0) return {true, x[1]};
  if (x[0] > 1.0) return {false, 1.0};
  return {false, x[0]};
}

Comparison order(long double a, long double b) {
  if (a > b) return Comparison::Succ;
  if (a < b) return Comparison::Prec;
  return Comparison::Indiff;
}

Comparison compare_line_values(LineValue a, LineValue b) {
  if (!a.tagged && !b.tagged) return order(a.v, b.v);
  if (a.tagged && b.tagged && a.v == b.v) return Comparison::Indiff;
  double da = a.tagged ? std::sin(1.0 / a.v) : a.v;
  double db = b.tagged ? std::sin(1.0 / b.v) : b.v;
  if (da != db) return order(da, db);
  long double la = a.tagged ? sinl(1.0L / a.v) : a.v;
  long double lb = b.tagged ? sinl(1.0L / b.v) : b.v;
  if (la != lb) return order(la, lb);
  // Distinct values closer than long double resolution: break ties by tag, then argument.
  if (a.tagged != b.tagged) return a.tagged ? Comparison::Succ : Comparison::Prec;
  return order(a.v, b.v);
}

Fixture rational_line() {
  AssumptionProfile p;
  p.order_dense = true;
  p.order_bounded = true;
  p.dimension = 2;
  auto cmp = [](const Point& a, const Point& b) {
    return compare_line_values(rational_line_value(a), rational_line_value(b));
  };
  auto solver = [](const Point& a, const Point& b, const Point& z) {
    if (a[1] == 0.0 && b[1] == 0.0 && z[1] > 0.0)
      return SegmentSolve{SolveStatus::NoSolution,
                          "values on x2 = 0 are rational; sin(1/" + format_double(z[1]) + ") is irrational"};
    return SegmentSolve{};
  };
  Domain d = Domain::box(2, 0, 4).with_natural_bounds({0, 0}, {kInf, kInf});
  Fixture f = make("rational_line", ComparisonOracle("rational_line", 2, cmp).with_segment_solver(solver), d, p,
                   {{"archimedean", H}, {"restricted_solvability", V}},
                   "sin(1/x2) for x2 > 0; on x2 = 0: x1 (rational x1 in [0,1]), 0 (irrational), 1 (x1 > 1)");
  f.hints.points = {{1, 0}, {0, 2}, {0, 0}, {0, kSinPeak}};
  f.hints.triples = {{Point{1, 0}, Point{0, 2}, Point{0, 0}}};
  return f;
}

QSqrt2 exact_sum(const ExactPoint& x) {
  QSqrt2 s;
  for (const QSqrt2& v : x) s += v;
  return s;
}

Fixture sqrt2_gap() {
  AssumptionProfile p = monotone_profile(2, false);
  p.convex_domain = false;
  auto cmp = [](const ExactPoint& a, const ExactPoint& b) {
    int s = (exact_sum(a) - exact_sum(b)).sign();
    return s > 0 ? Comparison::Succ : s < 0 ? Comparison::Prec : Comparison::Indiff;
  };
  Domain d = Domain::box(2, 0, 2).with_rational_only({false, true});
  auto solver = [d](const ExactPoint& x, const std::vector<int>& coords, const ExactPoint& base, const QSqrt2&,
                    const QSqrt2&) {
    QSqrt2 rest;
    for (std::size_t j = 0; j < base.size(); ++j)
      if (std::find(coords.begin(), coords.end(), static_cast<int>(j)) == coords.end()) rest += base[j];
    QSqrt2 c = (exact_sum(x) - rest) / QSqrt2(static_cast<long>(coords.size()));
    for (int i : coords) {
      if (d.rational_only(i) && !c.is_rational())
        return ExactLineSolve{SolveStatus::NoSolution, std::nullopt,
                              "indifference needs x" + std::to_string(i + 1) + " = " + c.str() + ", not rational"};
    }
    return ExactLineSolve{SolveStatus::Solved, c, ""};
  };
  ComparisonOracle oracle = ComparisonOracle("sqrt2_gap", 2, {}, cmp).with_exact_line_solver(solver);
  Fixture f = make("sqrt2_gap", oracle, d, p,
                   {{"restricted_solvability@1", H}, {"restricted_solvability@2", V}},
                   "x1 + x2 on R x Q, exact arithmetic in Q(sqrt2), sampled in [0,2]^2");
  return f;
}

Fixture diagonal_jump() {
  AssumptionProfile p = monotone_profile(2, false);
  p.order_dense = false;
  Domain d(Point{-1, -1}, Point{1, 1}, {{{1, -1}, 0}, {{-1, 1}, 0}});
  Fixture f = make("diagonal_jump",
                   ComparisonOracle::from_utility("diagonal_jump", 2, [](const Point& x) { return x[0] > 0 ? 1.0 : 0.0; }),
                   d, p, {{"separate", H}, {"continuity", V}},
                   "u = 0 for x <= 0, 1 for x1 > 0, on the diagonal of [-1,1]^2");
  f.hints.points = {{0, 0}, {0.5, 0.5}};
  return f;
}

Fixture wedge_jump() {
  AssumptionProfile p = monotone_profile(2, false);
  p.order_dense = false;
  Domain d(Point{0, 0}, Point{1, 1}, {{{-2, 1}, 0}, {{0.5, -1}, 0}});
  Fixture f = make("wedge_jump",
                   ComparisonOracle::from_utility(
                       "wedge_jump", 2, [](const Point& x) { return x[0] == 0.0 && x[1] == 0.0 ? 0.0 : 1.0; }),
                   d, p, {{"separate", H}, {"continuity", V}},
                   "u(0) = 0, u = 1 elsewhere, on {x in [0,1]^2 : 2 x1 >= x2 >= x1 / 2}");
  f.hints.points = {{0, 0}, {0.5, 0.5}};
  return f;
}

Fixture utility_fixture(std::string name, int n, const Domain& domain, ComparisonOracle::Utility u, bool convex_upper,
                        Expected expected, std::string notes) {
  if (domain.dimension() != n) throw UsageError(name + ": domain dimension mismatch");
  AssumptionProfile p = monotone_profile(n, domain.interior_only());
  p.convex_upper_sections = convex_upper;
  ComparisonOracle oracle = ComparisonOracle::from_utility(name, n, std::move(u));
  return make(std::move(name), std::move(oracle), domain, p, std::move(expected), std::move(notes));
}

Expected all_axioms_hold() {
  Expected e;
  for (auto k : {"continuity", "wold", "weak_wold", "mixture", "archimedean", "separate", "restricted_solvability",
                 "unrestricted_solvability", "stronger_rs"})
    e.emplace_back(k, H);
  return e;
}

using Factory = std::function<Fixture()>;

const std::map<std::string, Factory>& catalogue() {
  static const std::map<std::string, Factory> table = {
      {"gp2", gp2},
      {"linear_sum", [] { return make_linear_sum(2, unbounded(Domain::box(2, -10, 10, true))); }},
      {"lex", lex},
      {"step_jump", step_jump},
      {"projection", projection},
      {"step_bounded", step_bounded},
      {"sin_reciprocal", sin_reciprocal},
      {"rational_line", rational_line},
      {"sqrt2_gap", sqrt2_gap},
      {"diagonal_jump", diagonal_jump},
      {"wedge_jump", wedge_jump},
      {"min_util", [] { return make_min_util(3, unbounded(Domain::box(3, -10, 10, true))); }},
      {"max_util", [] { return make_max_util(3, unbounded(Domain::box(3, -10, 10, true))); }},
      {"sum_util", [] { return make_sum_util(3, unbounded(Domain::box(3, -10, 10, true))); }},
  };
  return table;
}

}  // namespace

Fixture make_linear_sum(int n, const Domain& domain) {
  Fixture f = utility_fixture(
      "linear_sum", n, domain, [](const Point& x) { return std::accumulate(x.begin(), x.end(), 0.0); }, true,
      all_axioms_hold(), "x1 + ... + xn");
  if (n >= 3)
    f.stronger_rs_coords = {0, 1};
  else if (n == 2)
    f.stronger_rs_coords = {0};
  return f;
}

Fixture make_min_util(int n, const Domain& domain) {
  return utility_fixture(
      "min_util", n, domain, [](const Point& x) { return *std::min_element(x.begin(), x.end()); }, true,
      {{"continuity", H}, {"unrestricted_solvability", V}}, "min(x1, ..., xn)");
}

Fixture make_max_util(int n, const Domain& domain) {
  return utility_fixture(
      "max_util", n, domain, [](const Point& x) { return *std::max_element(x.begin(), x.end()); }, false,
      {{"continuity", H}, {"unrestricted_solvability", V}}, "max(x1, ..., xn)");
}

Fixture make_sum_util(int n, const Domain& domain) {
  return utility_fixture(
      "sum_util", n, domain,
      [](const Point& x) {
        double s = 0.0;
        for (double v : x) s += v * v * v;
        return s;
      },
      false, {{"continuity", H}, {"unrestricted_solvability", H}}, "x1^3 + ... + xn^3");
}

Fixture fixture(const std::string& name) {
  const auto& table = catalogue();
  auto it = table.find(name);
  if (it == table.end()) {
    std::string valid;
    for (const auto& [k, _] : table) valid += (valid.empty() ? "" : ", ") + k;
    throw CatalogueError("unknown fixture '" + name + "'; valid names: " + valid);
  }
  return it->second();
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [k, _] : catalogue()) names.push_back(k);
  return names;
}

}  // namespace relab
