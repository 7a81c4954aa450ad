#pragma once

#include "relab/checkers/support.hpp"

#include <optional>
#include <vector>

namespace relab {

// Closure counterexample at `limit` for the approach points `seq`: a reference x with
// limit < x <= every p (upper section of x not closed) or every p <= x < limit (lower).
// The jump must be material: either the tail of `seq` is one indifference class, or a second
// reference w from `refs` sits strictly beyond x inside the jump. Limits that carry rounding
// error (interior mixture points) should pass allow_plateau = false.
std::optional<Witness> closure_counterexample(const ComparisonOracle& oracle, const Point& limit,
                                              const std::vector<Point>& seq, const std::vector<Point>& refs,
                                              bool allow_plateau = true);

}  // namespace relab
