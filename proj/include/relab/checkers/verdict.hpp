#pragma once

#include "relab/checkers/witness.hpp"
#include "relab/core/properties.hpp"

#include <optional>
#include <string>

namespace relab {

struct Verdict {
  VerdictKind kind = VerdictKind::Inapplicable;
  double resolution = 0.0;
  std::optional<Witness> witness;
  std::string reason;

  static Verdict holds(double resolution);
  static Verdict violated(Witness w, double resolution);
  static Verdict inapplicable(std::string reason);

  bool is_holds() const { return kind == VerdictKind::Holds; }
  bool is_violated() const { return kind == VerdictKind::Violated; }
};

}  // namespace relab
