#include "relab/checkers/witness.hpp"

namespace relab {

std::string_view to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::Closure: return "closure";
    case WitnessKind::Openness: return "openness";
    case WitnessKind::SolvGap: return "solv_gap";
    case WitnessKind::LineMiss: return "line_miss";
    case WitnessKind::CurveMiss: return "curve_miss";
    case WitnessKind::ArchScan: return "arch_scan";
    case WitnessKind::DenseGap: return "dense_gap";
    case WitnessKind::BasicFail: return "basic_fail";
  }
  return "?";
}

const AnyPoint* Witness::point(std::string_view role) const {
  for (const auto& [name, p] : points)
    if (name == role) return &p;
  return nullptr;
}

std::optional<double> Witness::param(std::string_view role) const {
  for (const auto& [name, v] : params)
    if (name == role) return v;
  return std::nullopt;
}

ReplayResult replay(const Witness& w, const ComparisonOracle& oracle) {
  ReplayResult r;
  for (std::size_t i = 0; i < w.transcript.size(); ++i) {
    const ComparisonRecord& rec = w.transcript[i];
    ++r.checked;
    if (oracle.compare(rec.a, rec.b) != rec.result) {
      r.ok = false;
      r.first_mismatch = i;
      return r;
    }
  }
  r.ok = !w.transcript.empty();
  return r;
}

}  // namespace relab
