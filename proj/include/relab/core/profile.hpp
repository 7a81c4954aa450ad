#pragma once

#include <string>

namespace relab {

struct AssumptionProfile {
  bool complete = true;
  bool transitive = true;
  bool weakly_monotone = false;
  int monotone_coordinate_count = 0;
  bool order_dense = false;
  bool convex_upper_sections = false;
  bool order_bounded = false;
  bool strong_order_bounded = false;
  bool interior = false;
  bool convex_domain = true;
  bool finite_dimensional = true;
  int dimension = 1;

  // Throws ConfigError when strong_order_bounded holds without order_bounded.
  void validate() const;
  std::string describe() const;
};

}  // namespace relab
