#include "relab/core/fixture.hpp"
#include "relab/core/properties.hpp"
#include "relab/harness/battery.hpp"
#include "relab/harness/corpus.hpp"
#include "relab/harness/edges.hpp"
#include "relab/harness/report_json.hpp"

#include <doctest.h>

#include <set>

using namespace relab;

namespace {

AssumptionProfile bare() {
  AssumptionProfile p;
  p.dimension = 2;
  return p;
}

AssumptionProfile finite_clique_profile() {
  AssumptionProfile p = bare();
  p.weakly_monotone = true;
  p.order_dense = true;
  p.order_bounded = true;
  p.interior = true;
  return p;
}

std::map<std::string, Verdict> verdicts(std::initializer_list<std::pair<Axiom, VerdictKind>> list) {
  std::map<std::string, Verdict> out;
  for (auto [a, k] : list) out[std::string(to_key(a))] = Verdict{k, 1e-3, std::nullopt, ""};
  return out;
}

}  // namespace

TEST_CASE("axiom keys round trip") {
  CHECK(all_axioms().size() == 9);
  for (Axiom a : all_axioms()) CHECK(axiom_from_key(to_key(a)) == a);
  CHECK_FALSE(axiom_from_key("nonsense"));
}

TEST_CASE("base edges") {
  std::vector<ImplicationEdge> e = implication_edges(bare());
  CHECK(e.size() == 10);
  for (const auto& x : e) {
    CHECK(x.source == EdgeSource::Base);
    CHECK(x.to != Axiom::UnrestrictedSolv);
  }
  AssumptionProfile nonconvex = bare();
  nonconvex.convex_domain = false;
  CHECK(implication_edges(nonconvex).empty());
}

TEST_CASE("finite clique") {
  AssumptionProfile p = finite_clique_profile();
  p.monotone_coordinate_count = 0;
  std::vector<ImplicationEdge> e = implication_edges(p);
  // 7 * 6 clique edges plus unrestricted -> restricted.
  CHECK(e.size() == 43);
  std::set<std::pair<Axiom, Axiom>> unique;
  for (const auto& x : e) unique.insert({x.from, x.to});
  CHECK(unique.size() == e.size());
  for (const auto& x : e) CHECK(x.to != Axiom::UnrestrictedSolv);
}

TEST_CASE("separate and continuity equivalence needs interior") {
  AssumptionProfile p = bare();
  p.monotone_coordinate_count = 1;
  p.order_bounded = true;
  auto has = [](const std::vector<ImplicationEdge>& e, Axiom a, Axiom b) {
    for (const auto& x : e)
      if (x.from == a && x.to == b) return true;
    return false;
  };
  CHECK_FALSE(has(implication_edges(p), Axiom::Separate, Axiom::Continuity));
  p.interior = true;
  CHECK(has(implication_edges(p), Axiom::Separate, Axiom::Continuity));
  p.finite_dimensional = false;
  CHECK_FALSE(has(implication_edges(p), Axiom::Separate, Axiom::Continuity));
}

TEST_CASE("strong order-bounded equivalences apply in any dimension") {
  AssumptionProfile p = bare();
  p.finite_dimensional = false;
  p.weakly_monotone = p.order_dense = p.order_bounded = p.strong_order_bounded = true;
  std::vector<ImplicationEdge> e = implication_edges(p);
  // Base edges already hold M->WW, M->A, WW->A and S->RS; four reverse edges remain.
  CHECK(e.size() == 14);
}

TEST_CASE("consistency") {
  auto one = check_consistency(verdicts({{Axiom::Continuity, VerdictKind::Holds}, {Axiom::Wold, VerdictKind::Violated}}),
                               implication_edges(bare()));
  CHECK(one.size() == 1);
  auto clique = check_consistency(
      verdicts({{Axiom::Mixture, VerdictKind::Holds}, {Axiom::Separate, VerdictKind::Violated}}),
      implication_edges(finite_clique_profile()));
  CHECK(!clique.empty());
  auto skipped = check_consistency(
      verdicts({{Axiom::Continuity, VerdictKind::Inapplicable}, {Axiom::Wold, VerdictKind::Violated}}),
      implication_edges(bare()));
  CHECK(skipped.empty());
}

TEST_CASE("battery on gp2") {
  BatteryReport b = run_battery(fixture("gp2"), CheckConfig{});
  auto kind = [&](std::string_view k) { return b.verdicts.at(std::string(k)).kind; };
  CHECK(kind(keys::separate) == VerdictKind::Holds);
  CHECK(kind(keys::continuity) == VerdictKind::Violated);
  CHECK(kind(keys::weak_wold) == VerdictKind::Violated);
  CHECK(kind(keys::archimedean) == VerdictKind::Violated);
  CHECK(kind(keys::restricted_solvability) == VerdictKind::Holds);
  CHECK(kind(keys::unrestricted_solvability) == VerdictKind::Violated);
  CHECK(kind(keys::mixture) == VerdictKind::Violated);
  CHECK(b.verdicts.count("restricted_solvability@1") == 1);
  CHECK(b.errors.empty());
  CHECK_FALSE(b.timing_ms);
  CHECK(check_consistency(b.verdicts, implication_edges(b.profile)).empty());
}

TEST_CASE("battery axiom filter") {
  BatteryReport b = run_battery(fixture("linear_sum"), CheckConfig{}, true, {Axiom::Continuity});
  CHECK(b.verdicts.size() == 1);
  CHECK(b.verdicts.at("continuity").is_holds());
  CHECK(b.timing_ms);
}

TEST_CASE("battery on sin_reciprocal") {
  BatteryReport b = run_battery(fixture("sin_reciprocal"), CheckConfig{});
  CHECK(b.verdicts.at("wold").is_holds());
  CHECK(b.verdicts.at("archimedean").is_holds());
  CHECK(b.verdicts.at("continuity").is_violated());
  CHECK(b.verdicts.at("mixture").is_violated());
  CHECK(b.verdicts.at("separate").is_violated());
}

TEST_CASE("witness json round trip") {
  BatteryReport b = run_battery(fixture("gp2"), CheckConfig{}, false, {Axiom::Continuity});
  const Witness& w = *b.verdicts.at("continuity").witness;
  nlohmann::json j = witness_json(w);
  CHECK(j.at("type") == "closure");
  CHECK(j.at("points").is_array());
  CHECK(j.at("comparisons").size() == w.transcript.size());
  Witness back = witness_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.points.size() == w.points.size());
  CHECK(replay(back, fixture("gp2").oracle).ok);

  CHECK(qsqrt2_from_string("1+3*sqrt2") == QSqrt2(1, 3));
  CHECK(qsqrt2_from_string("-1/2-3*sqrt2") == QSqrt2(mpq_class(-1, 2), -3));
  CHECK(qsqrt2_from_string("-1*sqrt2") == QSqrt2(0, -1));
  CHECK(qsqrt2_from_string("7/3") == QSqrt2(mpq_class(7, 3)));
  AnyPoint s = point_from_json(point_json(SeqPoint{{QSqrt2(2)}, QSqrt2(0)}));
  CHECK(std::get<SeqPoint>(s) == SeqPoint{{QSqrt2(2)}, QSqrt2(0)});
}
