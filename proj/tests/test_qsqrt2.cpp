#include "relab/core/errors.hpp"
#include "relab/core/qsqrt2.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using relab::QSqrt2;

namespace {

QSqrt2 random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 12);
  return QSqrt2(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

}  // namespace

TEST_CASE("qsqrt2: sqrt2 squared is exactly 2") {
  QSqrt2 r = QSqrt2::sqrt2();
  CHECK(r * r == QSqrt2(2));
  CHECK(!r.is_rational());
  CHECK((r * r).is_rational());
}

TEST_CASE("qsqrt2: sign and ordering match the real value") {
  // 3/2 - sqrt2 > 0 since 9/4 > 2; 7/5 - sqrt2 < 0 since 49/25 < 2.
  CHECK(QSqrt2(mpq_class(3, 2), -1).sign() > 0);
  CHECK(QSqrt2(mpq_class(7, 5), -1).sign() < 0);
  CHECK(QSqrt2(0).sign() == 0);
  std::mt19937_64 rng(7);
  for (int k = 0; k < 500; ++k) {
    QSqrt2 a = random_element(rng), b = random_element(rng);
    double da = a.to_double(), db = b.to_double();
    if (std::fabs(da - db) > 1e-9) CHECK((a < b) == (da < db));
  }
}

TEST_CASE("qsqrt2: division inverts multiplication and rejects zero") {
  QSqrt2 a(mpq_class(1, 3), mpq_class(-2, 5));
  QSqrt2 b(mpq_class(4), mpq_class(1, 7));
  CHECK((a * b) / b == a);
  CHECK_THROWS_AS(a / QSqrt2(0), relab::UsageError);
}

TEST_CASE("qsqrt2: rational literals parse exactly") {
  CHECK(QSqrt2::rational("1/3") == QSqrt2(mpq_class(1, 3)));
  CHECK(QSqrt2::rational("-0.25") == QSqrt2(mpq_class(-1, 4)));
  CHECK(QSqrt2::rational("2") == QSqrt2(2));
  CHECK_THROWS(QSqrt2::rational("x"));
}

TEST_CASE("qsqrt2: str") {
  CHECK(QSqrt2(mpq_class(1, 2)).str() == "1/2");
  CHECK(QSqrt2(1, 3).str() == "1+3*sqrt2");
  CHECK(QSqrt2(0, -1).str() == "-1*sqrt2");
}
