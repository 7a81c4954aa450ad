#pragma once

#include "relab/checkers/config.hpp"
#include "relab/checkers/witness.hpp"
#include "relab/core/domain.hpp"
#include "relab/core/oracle.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace relab {

// x ~ point, sandwiched by upper >= x >= lower on the segment. exact is true when the oracle
// answered Indiff at `point`; otherwise the sandwich ends are adjacent doubles in lambda.
struct IndiffCertificate {
  Point point;
  double lambda = 0.0;
  Point lower;
  Point upper;
  double lambda_lower = 0.0;
  double lambda_upper = 0.0;
  int iterations = 0;
  bool exact = true;
  std::vector<ComparisonRecord> transcript;
};

// Certificate, or a Witness (SolvGap for a certified gap, BasicFail on Incomp).
using SegmentResult = std::variant<IndiffCertificate, Witness>;

// Bisection over lambda on mixture(a, b, lambda) = lambda a + (1 - lambda) b.
SegmentResult solve_indifference_on_segment(const ComparisonOracle& oracle, const Point& x, const Point& a,
                                            const Point& b, const CheckConfig& cfg);

class RepresentationFailure : public std::runtime_error {
 public:
  explicit RepresentationFailure(Witness w);
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

// t* in [0,1] with x ~ diag(t*). RangeError when the diagonal does not sandwich x or leaves the
// domain, RepresentationFailure on a gap.
double wold_utility_value(const ComparisonOracle& oracle, const Domain& domain, const Point& x,
                          const CheckConfig& cfg);
IndiffCertificate wold_certificate(const ComparisonOracle& oracle, const Domain& domain, const Point& x,
                                   const CheckConfig& cfg);

struct UtilityTable {
  std::vector<Point> points;
  // nullopt marks a failed cell, explained in `failures` at the same index.
  std::vector<std::optional<double>> values;
  std::vector<std::string> failures;
  Point diag_lo;
  Point diag_hi;
  double tolerance = 0.0;
  double pitch = 0.0;

  std::size_t failed_cells() const;
};

// Grid of pitch `pitch` (0 picks width / 8), in lattice order.
UtilityTable build_utility_table(const ComparisonOracle& oracle, const Domain& domain, const CheckConfig& cfg,
                                 double pitch = 0.0);

// Header "x1,...,xn,t"; failed cells read "fail".
void write_csv(std::ostream& out, const UtilityTable& table);

struct Disagreement {
  std::size_t i = 0;
  std::size_t j = 0;
  Comparison oracle_says = Comparison::Indiff;
  double ti = 0.0;
  double tj = 0.0;
  double excess = 0.0;
};

struct AgreementReport {
  int pairs = 0;
  int agreements = 0;
  double fraction = 1.0;
  std::optional<Disagreement> worst;
};

AgreementReport verify_representation(const ComparisonOracle& oracle, const UtilityTable& table, int pair_budget,
                                      std::uint64_t seed);

}  // namespace relab
