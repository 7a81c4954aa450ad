#pragma once

#include "relab/core/qsqrt2.hpp"

#include <string>
#include <variant>
#include <vector>

namespace relab {

using Point = std::vector<double>;
using ExactPoint = std::vector<QSqrt2>;

// Eventually-constant sequence: x_i = prefix[i] for i < prefix.size(), tail afterwards.
struct SeqPoint {
  std::vector<QSqrt2> prefix;
  QSqrt2 tail;

  friend bool operator==(const SeqPoint&, const SeqPoint&) = default;
};

using Scalar = std::variant<double, QSqrt2>;
using AnyPoint = std::variant<Point, ExactPoint, SeqPoint>;

double to_double(const Scalar& s);

// lambda * a + (1 - lambda) * b. Throws UsageError on size mismatch or lambda outside [0,1].
Point mixture(const Point& a, const Point& b, double lambda);
ExactPoint mixture(const ExactPoint& a, const ExactPoint& b, const QSqrt2& lambda);

Point add_scaled(const Point& base, const Point& dir, double t);
Point to_float(const ExactPoint& p);
ExactPoint to_exact(const Point& p);

// Round-trippable text: "(0.5, 1)"; doubles use shortest exact repr.
std::string format_point(const Point& p);
std::string format_point(const ExactPoint& p);
std::string format_point(const SeqPoint& p);
std::string format_point(const AnyPoint& p);
std::string format_double(double v);

}  // namespace relab
