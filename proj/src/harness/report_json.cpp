#include "relab/harness/report_json.hpp"

#include "relab/core/errors.hpp"

#include <cmath>
#include <limits>

namespace relab {

using nlohmann::json;

namespace {

json exact_json(const std::vector<QSqrt2>& v) {
  json out = json::array();
  for (const QSqrt2& q : v) out.push_back(q.str());
  return out;
}

std::vector<QSqrt2> exact_from(const json& j) {
  std::vector<QSqrt2> out;
  for (const json& e : j) out.push_back(qsqrt2_from_string(e.get<std::string>()));
  return out;
}

json optional_ms(const std::optional<double>& ms) { return ms ? json(*ms) : json(nullptr); }

}  // namespace

QSqrt2 qsqrt2_from_string(const std::string& text) {
  const std::string suffix = "*sqrt2";
  if (text.size() <= suffix.size() || text.compare(text.size() - suffix.size(), suffix.size(), suffix) != 0)
    return QSqrt2::rational(text);
  std::string body = text.substr(0, text.size() - suffix.size());
  std::size_t split = body.find_last_of("+-");
  if (split == std::string::npos || split == 0) return QSqrt2(0, QSqrt2::rational(body).a());
  std::string b = body.substr(split);
  if (b[0] == '+') b.erase(0, 1);
  return QSqrt2(QSqrt2::rational(body.substr(0, split)).a(), QSqrt2::rational(b).a());
}

json point_json(const AnyPoint& p) {
  if (const auto* f = std::get_if<Point>(&p)) return json(*f);
  if (const auto* e = std::get_if<ExactPoint>(&p)) return exact_json(*e);
  const auto& s = std::get<SeqPoint>(p);
  return json{{"prefix", exact_json(s.prefix)}, {"tail", s.tail.str()}};
}

AnyPoint point_from_json(const json& j) {
  try {
    if (j.is_object()) return SeqPoint{exact_from(j.at("prefix")), qsqrt2_from_string(j.at("tail").get<std::string>())};
    if (!j.is_array()) throw UsageError("point must be an array or a sequence object");
    if (!j.empty() && j.front().is_string()) return exact_from(j);
    return j.get<Point>();
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed point: ") + e.what());
  }
}

json witness_json(const Witness& w) {
  json roles = json::array(), points = json::array(), params = json::object(), comps = json::array();
  for (const auto& [role, p] : w.points) {
    roles.push_back(role);
    points.push_back(point_json(p));
  }
  for (const auto& [k, v] : w.params) {
    if (std::isfinite(v)) params[k] = v;
    else params[k] = std::isnan(v) ? "nan" : v > 0 ? "inf" : "-inf";
  }
  for (const ComparisonRecord& r : w.transcript)
    comps.push_back({{"a", point_json(r.a)}, {"b", point_json(r.b)}, {"result", std::string(to_string(r.result))}});
  return {{"type", std::string(to_string(w.kind))},
          {"detail", w.detail},
          {"roles", roles},
          {"points", points},
          {"params", params},
          {"comparisons", comps}};
}

Witness witness_from_json(const json& j) {
  try {
    Witness w;
    const std::string type = j.at("type").get<std::string>();
    bool found = false;
    for (WitnessKind k : {WitnessKind::Closure, WitnessKind::Openness, WitnessKind::SolvGap, WitnessKind::LineMiss,
                          WitnessKind::CurveMiss, WitnessKind::ArchScan, WitnessKind::DenseGap, WitnessKind::BasicFail}) {
      if (to_string(k) == type) {
        w.kind = k;
        found = true;
      }
    }
    if (!found) throw UsageError("unknown witness type '" + type + "'");
    w.detail = j.value("detail", "");
    const json& roles = j.at("roles");
    const json& points = j.at("points");
    if (roles.size() != points.size()) throw UsageError("witness roles and points differ in length");
    for (std::size_t i = 0; i < roles.size(); ++i)
      w.points.emplace_back(roles[i].get<std::string>(), point_from_json(points[i]));
    const json params = j.value("params", json::object());
    for (const auto& [k, v] : params.items()) {
      if (!v.is_string()) {
        w.params.emplace_back(k, v.get<double>());
        continue;
      }
      const std::string s = v.get<std::string>();
      const double inf = std::numeric_limits<double>::infinity();
      w.params.emplace_back(k, s == "inf" ? inf : s == "-inf" ? -inf : std::numeric_limits<double>::quiet_NaN());
    }
    for (const json& c : j.at("comparisons")) {
      auto result = comparison_from_string(c.at("result").get<std::string>());
      if (!result) throw UsageError("unknown comparison result");
      w.transcript.push_back({point_from_json(c.at("a")), point_from_json(c.at("b")), *result});
    }
    return w;
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed witness: ") + e.what());
  }
}

json verdict_json(const std::string& key, const Verdict& v) {
  json out = {{"axiom", key}, {"kind", std::string(to_string(v.kind))}, {"resolution", v.resolution}};
  if (!v.reason.empty()) out["reason"] = v.reason;
  if (v.witness) out["witness"] = witness_json(*v.witness);
  return out;
}

json config_json(const CheckConfig& c) {
  return {{"resolution", c.resolution},     {"refine_depth", c.refine_depth}, {"bisect_tol", c.bisect_tol},
          {"bisect_max_iter", c.bisect_max_iter}, {"sample_budget", c.sample_budget}, {"seed", c.seed},
          {"pool_size", c.pool_size}};
}

json profile_json(const AssumptionProfile& p) {
  return {{"complete", p.complete},
          {"transitive", p.transitive},
          {"weakly_monotone", p.weakly_monotone},
          {"monotone_coordinate_count", p.monotone_coordinate_count},
          {"order_dense", p.order_dense},
          {"convex_upper_sections", p.convex_upper_sections},
          {"order_bounded", p.order_bounded},
          {"strong_order_bounded", p.strong_order_bounded},
          {"interior", p.interior},
          {"convex_domain", p.convex_domain},
          {"finite_dimensional", p.finite_dimensional},
          {"dimension", p.dimension}};
}

json edge_json(const ImplicationEdge& e) {
  return {{"from", std::string(to_key(e.from))},
          {"to", std::string(to_key(e.to))},
          {"source", std::string(to_string(e.source))}};
}

json battery_json(const BatteryReport& b) {
  json verdicts = json::array(), basic = json::object();
  for (const auto& [k, v] : b.verdicts) verdicts.push_back(verdict_json(k, v));
  for (const auto& [k, v] : b.basic) basic[k] = verdict_json(k, v);
  return {{"fixture", b.fixture},
          {"profile", profile_json(b.profile)},
          {"resolution", b.resolution},
          {"seed", b.seed},
          {"verdicts", verdicts},
          {"basic", basic},
          {"errors", b.errors},
          {"timing_ms", optional_ms(b.timing_ms)}};
}

json corpus_json(const CorpusReport& r) {
  json batteries = json::array(), expectations = json::array(), inconsistencies = json::array(),
       converses = json::array();
  for (const BatteryReport& b : r.batteries) batteries.push_back(battery_json(b));
  for (const ExpectationResult& e : r.expectations)
    expectations.push_back({{"fixture", e.fixture},
                            {"axiom", e.key},
                            {"expected", std::string(to_string(e.expected))},
                            {"actual", std::string(to_string(e.actual))},
                            {"pass", e.pass}});
  for (const FixtureInconsistency& i : r.inconsistencies)
    inconsistencies.push_back(
        {{"fixture", i.fixture}, {"edge", edge_json(i.inconsistency.edge)}, {"detail", i.inconsistency.detail}});
  for (const ConverseEvidence& c : r.converses)
    converses.push_back({{"edge", edge_json(c.edge)},
                         {"fixture", c.fixture ? json(*c.fixture) : json(nullptr)},
                         {"required", c.required}});
  return {{"config", config_json(r.cfg)},
          {"fixtures", batteries},
          {"expectations", expectations},
          {"inconsistencies", inconsistencies},
          {"converses", converses},
          {"ok", r.ok}};
}

}  // namespace relab
