#pragma once

#include "relab/checkers/config.hpp"
#include "relab/checkers/witness.hpp"
#include "relab/harness/battery.hpp"
#include "relab/harness/corpus.hpp"
#include "relab/harness/edges.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace relab {

inline constexpr const char* kToolVersion = "0.1.0";

// Float coordinates as numbers, exact ones as strings ("1/2", "1+3*sqrt2"), sequences as
// {"prefix": [...], "tail": ...}.
nlohmann::json point_json(const AnyPoint& p);
AnyPoint point_from_json(const nlohmann::json& j);
QSqrt2 qsqrt2_from_string(const std::string& text);

// {type, detail, roles, points, params, comparisons: [{a, b, result}]}.
nlohmann::json witness_json(const Witness& w);
// Inverse of witness_json; throws UsageError on malformed input.
Witness witness_from_json(const nlohmann::json& j);

nlohmann::json verdict_json(const std::string& key, const Verdict& v);
nlohmann::json config_json(const CheckConfig& cfg);
nlohmann::json profile_json(const AssumptionProfile& p);
nlohmann::json edge_json(const ImplicationEdge& e);
nlohmann::json battery_json(const BatteryReport& b);
nlohmann::json corpus_json(const CorpusReport& r);

}  // namespace relab
