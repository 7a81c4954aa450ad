#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace relab {

// Exact element a + b*sqrt(2) of the field Q(sqrt 2).
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(long v) : a_(v) {}  // NOLINT(implicit)
  explicit QSqrt2(mpq_class a, mpq_class b = 0);

  static QSqrt2 sqrt2() { return QSqrt2(0, 1); }
  // Parses "p", "p/q" or a finite decimal.
  static QSqrt2 rational(const std::string& text);

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }
  bool is_rational() const { return sgn(b_) == 0; }
  int sign() const;
  double to_double() const;

  QSqrt2 operator-() const;
  QSqrt2& operator+=(const QSqrt2& o);
  QSqrt2& operator-=(const QSqrt2& o);
  QSqrt2& operator*=(const QSqrt2& o);
  // Throws UsageError on division by zero.
  QSqrt2& operator/=(const QSqrt2& o);

  friend QSqrt2 operator+(QSqrt2 l, const QSqrt2& r) { return l += r; }
  friend QSqrt2 operator-(QSqrt2 l, const QSqrt2& r) { return l -= r; }
  friend QSqrt2 operator*(QSqrt2 l, const QSqrt2& r) { return l *= r; }
  friend QSqrt2 operator/(QSqrt2 l, const QSqrt2& r) { return l /= r; }

  friend bool operator==(const QSqrt2& l, const QSqrt2& r) { return l.a_ == r.a_ && l.b_ == r.b_; }
  friend bool operator<(const QSqrt2& l, const QSqrt2& r) { return (l - r).sign() < 0; }
  friend bool operator>(const QSqrt2& l, const QSqrt2& r) { return r < l; }
  friend bool operator<=(const QSqrt2& l, const QSqrt2& r) { return !(r < l); }
  friend bool operator>=(const QSqrt2& l, const QSqrt2& r) { return !(l < r); }

  // "a" when rational, otherwise "a+b*sqrt2".
  std::string str() const;

 private:
  mpq_class a_{0};
  mpq_class b_{0};
};

std::ostream& operator<<(std::ostream& os, const QSqrt2& v);

}  // namespace relab
