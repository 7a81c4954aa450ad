#include "relab/core/domain.hpp"

#include "relab/core/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace relab {

Domain::Domain(Point lo, Point hi, std::vector<HalfSpace> halfspaces, bool interior_only)
    : lo_(std::move(lo)), hi_(std::move(hi)), halfspaces_(std::move(halfspaces)), interior_only_(interior_only) {
  if (lo_.empty() || lo_.size() != hi_.size()) throw UsageError("domain: box bounds must have equal, nonzero size");
  for (std::size_t i = 0; i < lo_.size(); ++i) {
    if (!std::isfinite(lo_[i]) || !std::isfinite(hi_[i])) throw UsageError("domain: box bounds must be finite");
    if (lo_[i] > hi_[i]) throw UsageError("domain: lo > hi on coordinate " + std::to_string(i + 1));
  }
  for (const HalfSpace& h : halfspaces_)
    if (h.normal.size() != lo_.size()) throw UsageError("domain: half-space normal has wrong dimension");
  natural_lo_ = lo_;
  natural_hi_ = hi_;
}

Domain Domain::box(int n, double lo, double hi, bool interior_only) {
  if (n < 1) throw UsageError("domain: dimension must be >= 1");
  return Domain(Point(n, lo), Point(n, hi), {}, interior_only);
}

Domain Domain::with_natural_bounds(Point lo, Point hi) const {
  if (lo.size() != lo_.size() || hi.size() != hi_.size()) throw UsageError("domain: natural bounds size");
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > lo_[i] || hi[i] < hi_[i]) throw UsageError("domain: natural bounds must contain the box");
  Domain out = *this;
  out.natural_lo_ = std::move(lo);
  out.natural_hi_ = std::move(hi);
  return out;
}

bool Domain::rational_only(int i) const {
  return i >= 0 && i < static_cast<int>(rational_only_.size()) && rational_only_[i];
}

bool Domain::has_rational_only() const {
  return std::any_of(rational_only_.begin(), rational_only_.end(), [](bool b) { return b; });
}

Domain Domain::with_rational_only(std::vector<bool> mask) const {
  if (mask.size() != lo_.size()) throw UsageError("domain: rational mask size");
  Domain out = *this;
  out.rational_only_ = std::move(mask);
  return out;
}

bool Domain::contains(const Point& p) const {
  if (p.size() != lo_.size()) throw UsageError("contains: dimension mismatch");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!std::isfinite(p[i])) return false;
    if (interior_only_ ? !(p[i] > lo_[i] && p[i] < hi_[i]) : !(p[i] >= lo_[i] && p[i] <= hi_[i])) return false;
  }
  for (const HalfSpace& h : halfspaces_) {
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) s += h.normal[i] * p[i];
    if (interior_only_ ? !(s < h.offset) : !(s <= h.offset)) return false;
  }
  return true;
}

bool Domain::contains(const ExactPoint& p) const {
  if (p.size() != lo_.size()) throw UsageError("contains: dimension mismatch");
  auto ok = [&](const QSqrt2& v, double bound, bool upper) {
    QSqrt2 b{mpq_class(bound)};
    if (interior_only_) return upper ? v < b : b < v;
    return upper ? v <= b : b <= v;
  };
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (rational_only(static_cast<int>(i)) && !p[i].is_rational()) return false;
    if (!ok(p[i], lo_[i], false) || !ok(p[i], hi_[i], true)) return false;
  }
  for (const HalfSpace& h : halfspaces_) {
    QSqrt2 s;
    for (std::size_t i = 0; i < p.size(); ++i) s += QSqrt2(mpq_class(h.normal[i])) * p[i];
    if (!ok(s, h.offset, true)) return false;
  }
  return true;
}

std::optional<std::pair<double, double>> Domain::interval(const Point& base, const Point& dir, const Point& lo,
                                                          const Point& hi) const {
  const double inf = std::numeric_limits<double>::infinity();
  double tlo = -inf, thi = inf;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (dir[i] == 0.0) {
      if (base[i] < lo[i] || base[i] > hi[i]) return std::nullopt;
      continue;
    }
    double a = (lo[i] - base[i]) / dir[i];
    double b = (hi[i] - base[i]) / dir[i];
    if (a > b) std::swap(a, b);
    tlo = std::max(tlo, a);
    thi = std::min(thi, b);
  }
  for (const HalfSpace& h : halfspaces_) {
    double s = 0.0, r = h.offset;
    for (std::size_t i = 0; i < base.size(); ++i) {
      s += h.normal[i] * dir[i];
      r -= h.normal[i] * base[i];
    }
    if (s == 0.0) {
      if (r < 0.0) return std::nullopt;
    } else if (s > 0.0) {
      thi = std::min(thi, r / s);
    } else {
      tlo = std::max(tlo, r / s);
    }
  }
  if (!(tlo <= thi)) return std::nullopt;
  return std::make_pair(tlo, thi);
}

std::optional<std::pair<double, double>> Domain::line_interval(const Point& base, const Point& dir) const {
  if (base.size() != lo_.size() || dir.size() != lo_.size()) throw UsageError("line_interval: dimension mismatch");
  return interval(base, dir, lo_, hi_);
}

std::optional<std::pair<double, double>> Domain::natural_line_interval(const Point& base, const Point& dir) const {
  if (base.size() != lo_.size() || dir.size() != lo_.size()) throw UsageError("line_interval: dimension mismatch");
  return interval(base, dir, natural_lo_, natural_hi_);
}

double Domain::max_width() const {
  double w = 0.0;
  for (std::size_t i = 0; i < lo_.size(); ++i) w = std::max(w, hi_[i] - lo_[i]);
  return w;
}

Point Domain::diag(double t) const {
  Point out(lo_.size());
  for (std::size_t i = 0; i < lo_.size(); ++i) out[i] = lo_[i] + t * (hi_[i] - lo_[i]);
  return out;
}

}  // namespace relab
