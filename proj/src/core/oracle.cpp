#include "relab/core/oracle.hpp"

#include "relab/core/errors.hpp"

#include <cmath>

namespace relab {

std::string_view to_string(Comparison c) {
  switch (c) {
    case Comparison::Succ: return "succ";
    case Comparison::Prec: return "prec";
    case Comparison::Indiff: return "indiff";
    case Comparison::Incomp: return "incomp";
  }
  return "?";
}

std::optional<Comparison> comparison_from_string(std::string_view s) {
  if (s == "succ") return Comparison::Succ;
  if (s == "prec") return Comparison::Prec;
  if (s == "indiff") return Comparison::Indiff;
  if (s == "incomp") return Comparison::Incomp;
  return std::nullopt;
}

ComparisonOracle::ComparisonOracle(std::string name, int dimension, FloatFn float_fn, ExactFn exact_fn,
                                   SeqFn seq_fn)
    : name_(std::move(name)),
      dimension_(dimension),
      float_fn_(std::move(float_fn)),
      exact_fn_(std::move(exact_fn)),
      seq_fn_(std::move(seq_fn)) {
  if (dimension < 0) throw UsageError("oracle dimension must be nonnegative");
}

ComparisonOracle ComparisonOracle::from_utility(std::string name, int dimension, Utility u) {
  auto fn = [u = std::move(u)](const Point& a, const Point& b) {
    double ua = u(a), ub = u(b);
    if (ua > ub) return Comparison::Succ;
    if (ua < ub) return Comparison::Prec;
    if (ua == ub) return Comparison::Indiff;
    return Comparison::Incomp;
  };
  return ComparisonOracle(std::move(name), dimension, std::move(fn));
}

Comparison ComparisonOracle::compare(const Point& a, const Point& b) const {
  if (!float_fn_) throw UsageError("oracle '" + name_ + "' has no Float64 comparison");
  if (static_cast<int>(a.size()) != dimension_ || static_cast<int>(b.size()) != dimension_)
    throw UsageError("oracle '" + name_ + "': dimension mismatch");
  return float_fn_(a, b);
}

Comparison ComparisonOracle::compare(const ExactPoint& a, const ExactPoint& b) const {
  if (!exact_fn_) throw UsageError("oracle '" + name_ + "' has no exact comparison");
  if (static_cast<int>(a.size()) != dimension_ || static_cast<int>(b.size()) != dimension_)
    throw UsageError("oracle '" + name_ + "': dimension mismatch");
  return exact_fn_(a, b);
}

Comparison ComparisonOracle::compare(const SeqPoint& a, const SeqPoint& b) const {
  if (!seq_fn_) throw UsageError("oracle '" + name_ + "' has no sequence comparison");
  return seq_fn_(a, b);
}

Comparison ComparisonOracle::compare(const AnyPoint& a, const AnyPoint& b) const {
  if (a.index() != b.index()) throw UsageError("compare: mixed point kinds");
  return std::visit(
      [&](const auto& pa) {
        using T = std::decay_t<decltype(pa)>;
        return compare(pa, std::get<T>(b));
      },
      a);
}

ComparisonOracle ComparisonOracle::with_segment_solver(SegmentSolver s) const {
  ComparisonOracle out = *this;
  out.segment_solver_ = std::move(s);
  return out;
}

ComparisonOracle ComparisonOracle::with_exact_line_solver(ExactLineSolver s) const {
  ComparisonOracle out = *this;
  out.exact_line_solver_ = std::move(s);
  return out;
}

ComparisonOracle ComparisonOracle::with_call_counter(std::shared_ptr<std::atomic<long>> counter) const {
  ComparisonOracle out = *this;
  if (float_fn_) {
    out.float_fn_ = [inner = float_fn_, counter](const Point& a, const Point& b) {
      counter->fetch_add(1, std::memory_order_relaxed);
      return inner(a, b);
    };
  }
  return out;
}

}  // namespace relab
