#include "relab/core/qsqrt2.hpp"

#include "relab/core/errors.hpp"

#include <cmath>
#include <ostream>

namespace relab {

QSqrt2::QSqrt2(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

QSqrt2 QSqrt2::rational(const std::string& text) {
  std::string t = text;
  bool negative = false;
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
    negative = t[0] == '-';
    t = t.substr(1);
  }
  if (t.empty()) throw UsageError("empty rational literal");
  mpq_class q;
  auto dot = t.find('.');
  try {
    if (dot != std::string::npos) {
      std::string whole = t.substr(0, dot);
      std::string frac = t.substr(dot + 1);
      if (whole.empty()) whole = "0";
      mpz_class scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      mpz_class num(whole + (frac.empty() ? "" : frac), 10);
      q = mpq_class(num, scale);
    } else {
      q = mpq_class(t, 10);
    }
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed rational literal '" + text + "'");
  }
  if (q.get_den() == 0) throw UsageError("zero denominator in '" + text + "'");
  q.canonicalize();
  return QSqrt2(negative ? mpq_class(-q) : q, 0);
}

int QSqrt2::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  mpq_class a2 = a_ * a_;
  mpq_class b2 = 2 * b_ * b_;
  return cmp(a2, b2) > 0 ? sa : sb;
}

double QSqrt2::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(2.0); }

QSqrt2 QSqrt2::operator-() const { return QSqrt2(-a_, -b_); }

QSqrt2& QSqrt2::operator+=(const QSqrt2& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
  mpq_class a = a_ * o.a_ + 2 * b_ * o.b_;
  mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  return *this;
}

QSqrt2& QSqrt2::operator/=(const QSqrt2& o) {
  mpq_class norm = o.a_ * o.a_ - 2 * o.b_ * o.b_;
  if (sgn(norm) == 0) throw UsageError("division by zero in Q(sqrt2)");
  QSqrt2 conj(o.a_ / norm, -o.b_ / norm);
  return *this *= conj;
}

std::string QSqrt2::str() const {
  if (is_rational()) return a_.get_str();
  std::string out;
  if (sgn(a_) != 0) out = a_.get_str() + (sgn(b_) > 0 ? "+" : "");
  return out + b_.get_str() + "*sqrt2";
}

std::ostream& operator<<(std::ostream& os, const QSqrt2& v) { return os << v.str(); }

}  // namespace relab
