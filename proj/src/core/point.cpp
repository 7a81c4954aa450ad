#include "relab/core/point.hpp"

#include "relab/core/errors.hpp"

#include <charconv>
#include <cmath>

namespace relab {

double to_double(const Scalar& s) {
  if (const double* d = std::get_if<double>(&s)) return *d;
  return std::get<QSqrt2>(s).to_double();
}

Point mixture(const Point& a, const Point& b, double lambda) {
  if (a.size() != b.size()) throw UsageError("mixture: dimension mismatch");
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw UsageError("mixture: lambda outside [0,1]");
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = lambda * a[i] + (1.0 - lambda) * b[i];
  return out;
}

ExactPoint mixture(const ExactPoint& a, const ExactPoint& b, const QSqrt2& lambda) {
  if (a.size() != b.size()) throw UsageError("mixture: dimension mismatch");
  if (lambda.sign() < 0 || QSqrt2(1) < lambda) throw UsageError("mixture: lambda outside [0,1]");
  QSqrt2 mu = QSqrt2(1) - lambda;
  ExactPoint out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = lambda * a[i] + mu * b[i];
  return out;
}

Point add_scaled(const Point& base, const Point& dir, double t) {
  Point out(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) out[i] = base[i] + t * dir[i];
  return out;
}

Point to_float(const ExactPoint& p) {
  Point out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i].to_double();
  return out;
}

ExactPoint to_exact(const Point& p) {
  ExactPoint out;
  out.reserve(p.size());
  for (double v : p) out.emplace_back(mpq_class(v));
  return out;
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {
template <class T, class F>
std::string join(const std::vector<T>& xs, F f) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += f(xs[i]);
  }
  return out + ")";
}
}  // namespace

std::string format_point(const Point& p) { return join(p, format_double); }
std::string format_point(const ExactPoint& p) {
  return join(p, [](const QSqrt2& q) { return q.str(); });
}
std::string format_point(const SeqPoint& p) {
  return join(p.prefix, [](const QSqrt2& q) { return q.str(); }) + " tail " + p.tail.str();
}
std::string format_point(const AnyPoint& p) {
  return std::visit([](const auto& v) { return format_point(v); }, p);
}

}  // namespace relab
