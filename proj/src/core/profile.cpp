#include "relab/core/profile.hpp"

#include "relab/core/errors.hpp"
#include "relab/core/properties.hpp"

#include <sstream>

namespace relab {

void AssumptionProfile::validate() const {
  if (strong_order_bounded && !order_bounded) throw ConfigError("profile: strong_order_bounded requires order_bounded");
  if (dimension < 1 && finite_dimensional) throw ConfigError("profile: finite dimension must be >= 1");
  if (monotone_coordinate_count < 0) throw ConfigError("profile: negative monotone coordinate count");
}

std::string AssumptionProfile::describe() const {
  std::ostringstream os;
  os << "complete=" << complete << " transitive=" << transitive << " weakly_monotone=" << weakly_monotone
     << " monotone_coordinates=" << monotone_coordinate_count << " order_dense=" << order_dense
     << " convex_upper=" << convex_upper_sections << " order_bounded=" << order_bounded
     << " strong_order_bounded=" << strong_order_bounded << " interior=" << interior
     << " convex_domain=" << convex_domain << " finite_dimensional=" << finite_dimensional
     << " dimension=" << dimension;
  return os.str();
}

std::string_view to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Holds: return "holds";
    case VerdictKind::Violated: return "violated";
    case VerdictKind::Inapplicable: return "inapplicable";
  }
  return "?";
}

std::optional<VerdictKind> verdict_kind_from_string(std::string_view s) {
  if (s == "holds") return VerdictKind::Holds;
  if (s == "violated") return VerdictKind::Violated;
  if (s == "inapplicable") return VerdictKind::Inapplicable;
  return std::nullopt;
}

std::string coordinate_key(std::string_view property, int coordinate_one_based) {
  return std::string(property) + "@" + std::to_string(coordinate_one_based);
}

}  // namespace relab
