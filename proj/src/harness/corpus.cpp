#include "relab/harness/corpus.hpp"

#include "relab/core/fixture.hpp"

#include <algorithm>
#include <future>

namespace relab {

namespace {

// Axiom verdicts first, then basic properties such as order_dense.
VerdictKind kind_of(const BatteryReport& b, const std::string& key) {
  if (auto it = b.verdicts.find(key); it != b.verdicts.end()) return it->second.kind;
  if (auto it = b.basic.find(key); it != b.basic.end()) return it->second.kind;
  return VerdictKind::Inapplicable;
}

}  // namespace

std::size_t CorpusReport::failed_expectations() const {
  return static_cast<std::size_t>(
      std::count_if(expectations.begin(), expectations.end(), [](const ExpectationResult& e) { return !e.pass; }));
}

std::size_t CorpusReport::missing_converses() const {
  return static_cast<std::size_t>(std::count_if(converses.begin(), converses.end(), [](const ConverseEvidence& c) {
    return c.required && !c.fixture;
  }));
}

BatteryReport to_battery(const seq::SeqFixtureReport& s, const CheckConfig& cfg) {
  BatteryReport b;
  b.fixture = s.name;
  b.profile = s.profile;
  b.verdicts = s.verdicts;
  b.resolution = cfg.resolution;
  b.seed = cfg.seed;
  return b;
}

CorpusReport run_corpus(const CheckConfig& cfg, bool timing) {
  cfg.validate();
  CorpusReport r;
  r.cfg = cfg;

  std::vector<std::string> names = fixture_names();
  std::sort(names.begin(), names.end());
  std::vector<Fixture> fixtures;
  for (const std::string& n : names) fixtures.push_back(fixture(n));

  std::vector<std::future<BatteryReport>> jobs;
  for (const Fixture& f : fixtures)
    jobs.push_back(std::async(std::launch::async, [&f, &cfg, timing] { return run_battery(f, cfg, timing); }));
  for (auto& j : jobs) r.batteries.push_back(j.get());

  r.seqspace = seq::seq_fixture_checks(cfg);
  r.batteries.push_back(to_battery(r.seqspace, cfg));
  std::sort(r.batteries.begin(), r.batteries.end(),
            [](const BatteryReport& a, const BatteryReport& b) { return a.fixture < b.fixture; });

  auto expected_of = [&](const std::string& name) -> const std::vector<std::pair<std::string, VerdictKind>>& {
    if (name == r.seqspace.name) return r.seqspace.expected;
    return std::find_if(fixtures.begin(), fixtures.end(), [&](const Fixture& f) { return f.name == name; })->expected;
  };

  for (const BatteryReport& b : r.batteries) {
    for (const auto& [key, want] : expected_of(b.fixture)) {
      VerdictKind got = kind_of(b, key);
      r.expectations.push_back({b.fixture, key, want, got, got == want});
    }
    for (Inconsistency& i : check_consistency(b.verdicts, implication_edges(b.profile)))
      r.inconsistencies.push_back({b.fixture, std::move(i)});
  }

  // No catalogue fixture is weak Wold without being Wold, so that arrow is informational.
  for (const ImplicationEdge& e : base_edges()) {
    ConverseEvidence c{e, std::nullopt, !(e.from == Axiom::Wold && e.to == Axiom::WeakWold)};
    for (const BatteryReport& b : r.batteries) {
      if (kind_of(b, std::string(to_key(e.to))) == VerdictKind::Holds &&
          kind_of(b, std::string(to_key(e.from))) == VerdictKind::Violated) {
        c.fixture = b.fixture;
        break;
      }
    }
    r.converses.push_back(std::move(c));
  }

  r.ok = r.failed_expectations() == 0 && r.inconsistencies.empty() && r.missing_converses() == 0;
  return r;
}

}  // namespace relab
