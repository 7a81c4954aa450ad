// One pass/fail line per acceptance criterion; exit status 1 if any fails.
#include "ast_fuzzer.hpp"
#include "relab/checkers/checkers.hpp"
#include "relab/core/fixture.hpp"
#include "relab/core/properties.hpp"
#include "relab/expr/parser.hpp"
#include "relab/harness/corpus.hpp"
#include "relab/representation/representation.hpp"
#include "relab/seqspace/seqspace.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>

using namespace relab;

namespace {

constexpr VerdictKind H = VerdictKind::Holds;
constexpr VerdictKind V = VerdictKind::Violated;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Expected table, written out independently of the fixture catalogue.
const std::vector<std::tuple<std::string, std::string, VerdictKind>>& corpus_table() {
  static const std::vector<std::tuple<std::string, std::string, VerdictKind>> t = {
      {"gp2", "separate", H},
      {"gp2", "continuity", V},
      {"gp2", "mixture", V},
      {"gp2", "weak_wold", V},
      {"gp2", "wold", V},
      {"gp2", "archimedean", V},
      {"gp2", "unrestricted_solvability", V},
      {"gp2", "restricted_solvability", H},
      {"linear_sum", "continuity", H},
      {"linear_sum", "wold", H},
      {"linear_sum", "weak_wold", H},
      {"linear_sum", "mixture", H},
      {"linear_sum", "archimedean", H},
      {"linear_sum", "separate", H},
      {"linear_sum", "restricted_solvability", H},
      {"linear_sum", "unrestricted_solvability", H},
      {"linear_sum", "stronger_rs", H},
      {"lex", "order_dense", H},
      {"lex", "weak_wold", V},
      {"lex", "wold", V},
      {"lex", "continuity", V},
      {"lex", "separate", V},
      {"lex", "mixture", V},
      {"step_jump", "order_dense", V},
      {"step_jump", "wold", V},
      {"step_jump", "weak_wold", V},
      {"projection", "continuity", H},
      {"projection", "unrestricted_solvability", V},
      {"step_bounded", "restricted_solvability", H},
      {"step_bounded", "unrestricted_solvability", H},
      {"step_bounded", "separate", V},
      {"step_bounded", "continuity", V},
      {"step_bounded", "archimedean", V},
      {"step_bounded", "order_dense", V},
      {"sin_reciprocal", "wold", H},
      {"sin_reciprocal", "archimedean", H},
      {"sin_reciprocal", "continuity", V},
      {"sin_reciprocal", "mixture", V},
      {"sin_reciprocal", "separate", V},
      {"rational_line", "archimedean", H},
      {"rational_line", "restricted_solvability", V},
      {"sqrt2_gap", "restricted_solvability@2", V},
      {"sqrt2_gap", "restricted_solvability@1", H},
      {"diagonal_jump", "separate", H},
      {"diagonal_jump", "continuity", V},
      {"wedge_jump", "separate", H},
      {"wedge_jump", "continuity", V},
      {"seqspace_inf", "separate", H},
      {"seqspace_inf", "mixture", H},
      {"seqspace_inf", "continuity", V},
  };
  return t;
}

const BatteryReport* find(const CorpusReport& r, const std::string& name) {
  for (const BatteryReport& b : r.batteries)
    if (b.fixture == name) return &b;
  return nullptr;
}

std::optional<VerdictKind> kind(const BatteryReport& b, const std::string& key) {
  if (auto it = b.verdicts.find(key); it != b.verdicts.end()) return it->second.kind;
  if (auto it = b.basic.find(key); it != b.basic.end()) return it->second.kind;
  return std::nullopt;
}

Outcome corpus_table_matches(const CorpusReport& r) {
  Outcome o;
  int checked = 0;
  for (const auto& [fix, key, want] : corpus_table()) {
    const BatteryReport* b = find(r, fix);
    auto got = b ? kind(*b, key) : std::nullopt;
    ++checked;
    if (got != want) {
      o.pass = false;
      o.detail += " " + fix + "/" + key + "=" + (got ? std::string(to_string(*got)) : "missing");
    }
  }
  if (r.failed_expectations() > 0) {
    o.pass = false;
    o.detail += " catalogue expectations failed: " + std::to_string(r.failed_expectations());
  }
  if (o.pass) o.detail = std::to_string(checked) + " entries match";
  return o;
}

Outcome no_inconsistencies(const CorpusReport& coarse, const CorpusReport& fine) {
  Outcome o;
  o.pass = coarse.inconsistencies.empty() && fine.inconsistencies.empty();
  o.detail = "inconsistencies at 1e-3: " + std::to_string(coarse.inconsistencies.size()) +
             ", at 2.5e-4: " + std::to_string(fine.inconsistencies.size());
  for (const auto& i : coarse.inconsistencies) o.detail += "; " + i.fixture + ": " + i.inconsistency.detail;
  for (const auto& i : fine.inconsistencies) o.detail += "; " + i.fixture + ": " + i.inconsistency.detail;
  return o;
}

// The nine arrows whose converse the catalogue is meant to refute; wold -> weak_wold has no
// catalogue witness and is reported separately.
Outcome converse_coverage(const CorpusReport& r) {
  Outcome o;
  int covered = 0, required = 0;
  std::ostringstream names;
  for (const ConverseEvidence& c : r.converses) {
    if (!c.required) continue;
    ++required;
    std::string arrow = std::string(to_key(c.edge.from)) + "->" + std::string(to_key(c.edge.to));
    // Re-derive from the batteries rather than trusting the report.
    bool ok = false;
    if (c.fixture) {
      const BatteryReport* b = find(r, *c.fixture);
      ok = b && kind(*b, std::string(to_key(c.edge.to))) == H && kind(*b, std::string(to_key(c.edge.from))) == V;
    }
    covered += ok;
    names << " " << arrow << ":" << (ok ? *c.fixture : "MISSING");
  }
  o.pass = required == 9 && covered == 9;
  o.detail = std::to_string(covered) + "/" + std::to_string(required) + names.str();
  return o;
}

Outcome witnesses_replay(const CorpusReport& r) {
  Outcome o;
  int total = 0, ok = 0;
  for (const BatteryReport& b : r.batteries) {
    ComparisonOracle oracle = b.fixture == r.seqspace.name ? seq::inf_oracle() : fixture(b.fixture).oracle;
    for (const auto* m : {&b.verdicts, &b.basic})
      for (const auto& [key, v] : *m) {
        if (!v.is_violated()) continue;
        ++total;
        if (v.witness && !v.witness->transcript.empty() && replay(*v.witness, oracle).ok)
          ++ok;
        else
          o.detail += " " + b.fixture + "/" + key;
      }
  }
  o.pass = total > 0 && ok == total;
  o.detail = std::to_string(ok) + "/" + std::to_string(total) + " replay exactly" + o.detail;
  return o;
}

Outcome bisection_quality() {
  auto calls = std::make_shared<std::atomic<long>>(0);
  ComparisonOracle o = make_linear_sum(2, Domain::box(2, 0, 2)).oracle.with_call_counter(calls);
  SegmentResult r = solve_indifference_on_segment(o, {1, 0.5}, {2, 2}, {0, 0}, CheckConfig{});
  Outcome out;
  const auto* c = std::get_if<IndiffCertificate>(&r);
  // Analytic solution of lambda * 4 = 1.5.
  const double lambda = 1.5 / 4.0;
  out.pass = c && std::fabs(c->lambda - lambda) <= 1e-12 && calls->load() <= 200;
  std::ostringstream d;
  d.precision(17);
  d << "lambda=" << (c ? c->lambda : NAN) << " analytic=" << lambda << " oracle calls=" << calls->load();
  out.detail = d.str();
  return out;
}

Outcome representation() {
  const Domain box = Domain::box(2, 0, 2);
  const CheckConfig cfg;
  using U = std::function<double(const Point&)>;
  const std::vector<std::pair<std::string, U>> utilities = {
      {"linear_sum", [](const Point& x) { return x[0] + x[1]; }},
      {"min_util", [](const Point& x) { return std::min(x[0], x[1]); }},
      {"max_util", [](const Point& x) { return std::max(x[0], x[1]); }},
  };
  Outcome o;
  for (const auto& [name, u] : utilities) {
    ComparisonOracle oracle = ComparisonOracle::from_utility(name, 2, u);
    ComparisonOracle cubed =
        ComparisonOracle::from_utility(name + "^3", 2, [u = u](const Point& x) { return std::pow(u(x), 3); });
    UtilityTable t = build_utility_table(oracle, box, cfg, 0.25);
    UtilityTable t3 = build_utility_table(cubed, box, cfg, 0.25);
    if (t.failed_cells() || t3.failed_cells()) {
      o.pass = false;
      o.detail += " " + name + ": failed cells";
      continue;
    }
    AgreementReport a = verify_representation(oracle, t, 1000, 0);
    bool monotone = true;
    for (std::size_t i = 0; i < t.points.size(); ++i)
      for (std::size_t j = 0; j < t.points.size(); ++j)
        if (t.points[i][0] <= t.points[j][0] && t.points[i][1] <= t.points[j][1] &&
            *t.values[i] > *t.values[j] + 1e-12)
          monotone = false;
    double drift = 0;
    for (std::size_t i = 0; i < t.points.size(); ++i) drift = std::max(drift, std::fabs(*t.values[i] - *t3.values[i]));
    bool ok = a.fraction == 1.0 && a.pairs == 1000 && monotone && drift <= 1e-10;
    o.pass = o.pass && ok;
    std::ostringstream d;
    d << " " << name << ": agreement " << a.agreements << "/" << a.pairs << (monotone ? " monotone" : " NOT monotone")
      << " cube drift " << drift;
    o.detail += d.str();
  }
  return o;
}

Outcome parser() {
  Outcome o;
  using namespace relab::expr;
  auto at = [](const std::string& s, const Point& p) { return eval(parse(s, static_cast<int>(p.size())), p); };
  bool precedence = at("2+3*4", {0}) == 14 && at("-x1^2", {2}) == -4 &&
                    std::fabs(at("x1*x2/(x1^2+x2^2)", {3, 1}) - 0.3) < 1e-15;
  AstFuzzer fuzz(99, 3);
  int exact = 0;
  for (int k = 0; k < 500; ++k) {
    Ast a = fuzz.ast(1 + k % 5);
    std::string text = format(a);
    exact += equal(parse(text, 3), a) && format(parse(text, 3)) == text;
  }
  o.pass = precedence && exact == 500;
  o.detail = std::string("precedence ") + (precedence ? "ok" : "FAILED") + ", round trips " + std::to_string(exact) + "/500";
  return o;
}

Outcome exact_arithmetic(const CorpusReport& r) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
  auto pick = [&] { return QSqrt2(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng))); };
  int laws = 0;
  for (int k = 0; k < 1000; ++k) {
    QSqrt2 a = pick(), b = pick(), c = pick();
    bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
              a + b == b + a && a * b == b * a && a - a == QSqrt2(0) && (b == QSqrt2(0) || (a / b) * b == a);
    laws += ok;
  }
  Outcome o;
  bool certified = false;
  if (const BatteryReport* b = find(r, "sqrt2_gap")) {
    auto it = b->verdicts.find("restricted_solvability@2");
    if (it != b->verdicts.end() && it->second.is_violated() && it->second.witness) {
      const Witness& w = *it->second.witness;
      certified = replay(w, fixture("sqrt2_gap").oracle).ok && !w.transcript.empty();
      for (const ComparisonRecord& rec : w.transcript)
        certified = certified && std::holds_alternative<ExactPoint>(rec.a) && std::holds_alternative<ExactPoint>(rec.b);
    }
  }
  o.pass = laws == 1000 && certified;
  o.detail = "field laws " + std::to_string(laws) + "/1000, sqrt2_gap certificate " +
             (certified ? "exact" : "NOT exact");
  return o;
}

Outcome one_dimensional_collapse(const CorpusReport& r) {
  Outcome o;
  const BatteryReport* b = find(r, "sin_reciprocal");
  if (!b) return {false, "sin_reciprocal missing"};
  auto c = kind(*b, "continuity"), s = kind(*b, "separate"), m = kind(*b, "mixture");
  o.pass = c && c == s && c == m;
  o.detail = "continuity " + std::string(c ? to_string(*c) : "?") + ", separate " +
             std::string(s ? to_string(*s) : "?") + ", mixture " + std::string(m ? to_string(*m) : "?");
  return o;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  bool all = true;
  auto report = [&](int n, const std::string& title, const Outcome& o) {
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << " (" << title << "): " << o.detail << std::endl;
  };

  CheckConfig coarse;
  CheckConfig fine;
  fine.resolution = 2.5e-4;
  CorpusReport r = run_corpus(coarse);
  CorpusReport rf = run_corpus(fine);

  report(1, "corpus table", corpus_table_matches(r));
  report(2, "implication consistency", no_inconsistencies(r, rf));
  report(3, "converse coverage", converse_coverage(r));
  report(4, "witness replay", witnesses_replay(r));
  report(5, "bisection quality", bisection_quality());
  report(6, "representation", representation());
  report(7, "parser", parser());
  report(8, "exact arithmetic", exact_arithmetic(r));
  report(9, "one-dimensional collapse", one_dimensional_collapse(r));

  double secs = std::chrono::duration<double>(clock::now() - start).count();
  std::cout << "acceptance: " << (all ? "all criteria pass" : "FAILURES") << " in " << secs << " s" << std::endl;
  return all ? 0 : 1;
}
