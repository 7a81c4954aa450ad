#pragma once

#include "relab/core/point.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace relab {

// normal . x <= offset
struct HalfSpace {
  Point normal;
  double offset = 0.0;
};

// Box intersected with closed half-spaces; strict inequalities when interior_only.
class Domain {
 public:
  Domain(Point lo, Point hi, std::vector<HalfSpace> halfspaces = {}, bool interior_only = false);
  static Domain box(int n, double lo, double hi, bool interior_only = false);

  int dimension() const { return static_cast<int>(lo_.size()); }
  const Point& lo() const { return lo_; }
  const Point& hi() const { return hi_; }
  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
  bool interior_only() const { return interior_only_; }

  // Bounds of the unclipped domain, possibly infinite. Defaults to the box.
  const Point& natural_lo() const { return natural_lo_; }
  const Point& natural_hi() const { return natural_hi_; }
  Domain with_natural_bounds(Point lo, Point hi) const;

  // Coordinates restricted to rational values (only meaningful for exact points).
  bool rational_only(int i) const;
  bool has_rational_only() const;
  Domain with_rational_only(std::vector<bool> mask) const;

  bool contains(const Point& p) const;
  bool contains(const ExactPoint& p) const;
  bool convex() const { return !has_rational_only(); }

  // Closed parameter interval {t : base + t*dir satisfies the closed constraints}.
  std::optional<std::pair<double, double>> line_interval(const Point& base, const Point& dir) const;
  // Same, against natural bounds instead of the box.
  std::optional<std::pair<double, double>> natural_line_interval(const Point& base, const Point& dir) const;

  double max_width() const;
  // lo + t (hi - lo)
  Point diag(double t) const;

 private:
  std::optional<std::pair<double, double>> interval(const Point& base, const Point& dir, const Point& lo,
                                                    const Point& hi) const;

  Point lo_, hi_;
  std::vector<HalfSpace> halfspaces_;
  bool interior_only_;
  Point natural_lo_, natural_hi_;
  std::vector<bool> rational_only_;
};

inline bool contains(const Domain& d, const Point& p) { return d.contains(p); }

}  // namespace relab
