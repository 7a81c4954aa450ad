#pragma once

#include "relab/core/comparison.hpp"
#include "relab/core/oracle.hpp"
#include "relab/core/point.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace relab {

enum class WitnessKind { Closure, Openness, SolvGap, LineMiss, CurveMiss, ArchScan, DenseGap, BasicFail };

std::string_view to_string(WitnessKind k);

struct ComparisonRecord {
  AnyPoint a;
  AnyPoint b;
  Comparison result;
};

// Counterexample certificate. `points` names the roles (x, limit, z, ...); `transcript`
// holds every comparison the claim rests on.
struct Witness {
  WitnessKind kind = WitnessKind::BasicFail;
  std::string detail;
  std::vector<std::pair<std::string, AnyPoint>> points;
  std::vector<std::pair<std::string, double>> params;
  std::vector<ComparisonRecord> transcript;

  const AnyPoint* point(std::string_view role) const;
  std::optional<double> param(std::string_view role) const;
};

struct ReplayResult {
  bool ok = true;
  std::size_t checked = 0;
  std::optional<std::size_t> first_mismatch;
};

// Recomputes every recorded comparison; ok iff all agree exactly.
ReplayResult replay(const Witness& w, const ComparisonOracle& oracle);

// Oracle front end that appends each comparison to a transcript.
class Recorder {
 public:
  explicit Recorder(const ComparisonOracle& oracle) : oracle_(oracle) {}

  template <class P>
  Comparison operator()(const P& a, const P& b) {
    Comparison c = oracle_.compare(a, b);
    log_.push_back({AnyPoint(a), AnyPoint(b), c});
    return c;
  }

  std::vector<ComparisonRecord>& log() { return log_; }
  std::vector<ComparisonRecord> take() { return std::move(log_); }

 private:
  const ComparisonOracle& oracle_;
  std::vector<ComparisonRecord> log_;
};

}  // namespace relab
