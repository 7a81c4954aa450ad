#include "relab/harness/battery.hpp"

#include "relab/checkers/checkers.hpp"
#include "relab/core/properties.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

namespace relab {

BatteryReport run_battery(const Fixture& f, const CheckConfig& cfg, bool timing, const std::vector<Axiom>& axioms) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  BatteryReport r;
  r.fixture = f.name;
  r.profile = f.profile;
  r.resolution = cfg.resolution;
  r.seed = cfg.seed;
  const ComparisonOracle& o = f.oracle;
  const Domain& d = f.domain;
  const Hints& h = f.hints;

  auto wanted = [&](std::string_view key) {
    return axioms.empty() || std::any_of(axioms.begin(), axioms.end(), [&](Axiom a) { return to_key(a) == key; });
  };
  auto guarded = [&](std::string_view key, const std::function<Verdict()>& fn) {
    if (!wanted(key)) return;
    std::string k(key);
    try {
      r.verdicts[k] = fn();
    } catch (const std::exception& e) {
      r.errors[k] = e.what();
      r.verdicts[k] = Verdict::inapplicable(std::string("error: ") + e.what());
    }
  };

  try {
    r.basic = check_basic(o, d, cfg, h);
  } catch (const std::exception& e) {
    r.errors["basic"] = e.what();
  }
  guarded(keys::continuity, [&] { return check_continuity(o, d, cfg, h); });
  guarded(keys::wold, [&] { return check_wold(o, d, cfg, h); });
  guarded(keys::weak_wold, [&] { return check_weak_wold(o, d, cfg, h); });
  guarded(keys::mixture, [&] { return check_mixture_continuity(o, d, cfg, h); });
  guarded(keys::archimedean, [&] { return check_archimedean(o, d, cfg, h); });
  guarded(keys::separate, [&] { return check_separate_continuity(o, d, cfg, h); });

  // The aggregate is the first violated coordinate, as in check_restricted_solvability.
  guarded(keys::restricted_solvability, [&] {
    std::vector<Verdict> per = restricted_solvability_by_coordinate(o, d, cfg, h);
    for (std::size_t i = 0; i < per.size(); ++i)
      r.verdicts[coordinate_key(keys::restricted_solvability, static_cast<int>(i) + 1)] = per[i];
    bool applicable = false;
    for (const Verdict& v : per) {
      if (v.is_violated()) return v;
      applicable = applicable || v.kind != VerdictKind::Inapplicable;
    }
    if (applicable) return Verdict::holds(cfg.resolution);
    return per.empty() ? Verdict::inapplicable("no coordinates checked") : per.front();
  });
  guarded(keys::unrestricted_solvability, [&] { return check_unrestricted_solvability(o, d, cfg, h); });
  if (!f.stronger_rs_coords.empty() || (!axioms.empty() && wanted(keys::stronger_rs)))
    guarded(keys::stronger_rs, [&] { return check_stronger_rs(o, d, f.stronger_rs_coords, cfg, h); });

  if (timing)
    r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace relab
