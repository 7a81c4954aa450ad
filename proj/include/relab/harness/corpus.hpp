#pragma once

#include "relab/checkers/config.hpp"
#include "relab/harness/battery.hpp"
#include "relab/harness/edges.hpp"
#include "relab/seqspace/seqspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace relab {

struct ExpectationResult {
  std::string fixture;
  std::string key;
  VerdictKind expected;
  VerdictKind actual;
  bool pass = false;
};

struct FixtureInconsistency {
  std::string fixture;
  Inconsistency inconsistency;
};

// A fixture where edge.to holds while edge.from is violated.
struct ConverseEvidence {
  ImplicationEdge edge;
  std::optional<std::string> fixture;
  // Informational arrows do not affect CorpusReport::ok.
  bool required = true;
};

struct CorpusReport {
  CheckConfig cfg;
  // Catalogue batteries plus the sequence-space fixture, sorted by name.
  std::vector<BatteryReport> batteries;
  seq::SeqFixtureReport seqspace;
  std::vector<ExpectationResult> expectations;
  std::vector<FixtureInconsistency> inconsistencies;
  std::vector<ConverseEvidence> converses;
  bool ok = false;

  std::size_t failed_expectations() const;
  std::size_t missing_converses() const;
};

BatteryReport to_battery(const seq::SeqFixtureReport& s, const CheckConfig& cfg);

// Batteries run concurrently; the report does not depend on scheduling.
CorpusReport run_corpus(const CheckConfig& cfg, bool timing = false);

}  // namespace relab
