#pragma once

#include "relab/core/comparison.hpp"
#include "relab/core/point.hpp"

#include <atomic>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace relab {

// Fixture-specific knowledge about whether a segment [a,b] meets the class of z.
enum class SolveStatus { Unknown, Solved, NoSolution };

struct SegmentSolve {
  SolveStatus status = SolveStatus::Unknown;
  std::string reason;
};

using SegmentSolver = std::function<SegmentSolve(const Point& a, const Point& b, const Point& z)>;

// Exact solve of "base with coordinates in `coords` set to c is indifferent to x", c in [lo, hi].
struct ExactLineSolve {
  SolveStatus status = SolveStatus::Unknown;
  std::optional<QSqrt2> solution;
  std::string reason;
};

using ExactLineSolver = std::function<ExactLineSolve(const ExactPoint& x, const std::vector<int>& coords,
                                                     const ExactPoint& base, const QSqrt2& lo,
                                                     const QSqrt2& hi)>;

class ComparisonOracle {
 public:
  using FloatFn = std::function<Comparison(const Point&, const Point&)>;
  using ExactFn = std::function<Comparison(const ExactPoint&, const ExactPoint&)>;
  using SeqFn = std::function<Comparison(const SeqPoint&, const SeqPoint&)>;
  using Utility = std::function<double(const Point&)>;

  // dimension 0 marks a sequence-space oracle.
  ComparisonOracle(std::string name, int dimension, FloatFn float_fn, ExactFn exact_fn = {},
                   SeqFn seq_fn = {});

  static ComparisonOracle from_utility(std::string name, int dimension, Utility u);

  const std::string& name() const { return name_; }
  int dimension() const { return dimension_; }
  bool exact() const { return static_cast<bool>(exact_fn_) || static_cast<bool>(seq_fn_); }
  bool has_float() const { return static_cast<bool>(float_fn_); }
  bool has_exact() const { return static_cast<bool>(exact_fn_); }
  bool has_seq() const { return static_cast<bool>(seq_fn_); }

  Comparison compare(const Point& a, const Point& b) const;
  Comparison compare(const ExactPoint& a, const ExactPoint& b) const;
  Comparison compare(const SeqPoint& a, const SeqPoint& b) const;
  Comparison compare(const AnyPoint& a, const AnyPoint& b) const;

  const SegmentSolver& segment_solver() const { return segment_solver_; }
  const ExactLineSolver& exact_line_solver() const { return exact_line_solver_; }
  ComparisonOracle with_segment_solver(SegmentSolver s) const;
  ComparisonOracle with_exact_line_solver(ExactLineSolver s) const;

  // Copy whose float comparisons increment *counter.
  ComparisonOracle with_call_counter(std::shared_ptr<std::atomic<long>> counter) const;

 private:
  std::string name_;
  int dimension_;
  FloatFn float_fn_;
  ExactFn exact_fn_;
  SeqFn seq_fn_;
  SegmentSolver segment_solver_;
  ExactLineSolver exact_line_solver_;
};

inline Comparison compare(const ComparisonOracle& o, const Point& a, const Point& b) { return o.compare(a, b); }
inline Comparison compare(const ComparisonOracle& o, const ExactPoint& a, const ExactPoint& b) {
  return o.compare(a, b);
}

}  // namespace relab
