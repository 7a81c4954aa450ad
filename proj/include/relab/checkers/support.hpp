#pragma once

// Shared sampling and search machinery for the checkers.

#include "relab/checkers/config.hpp"
#include "relab/checkers/verdict.hpp"
#include "relab/checkers/witness.hpp"
#include "relab/core/domain.hpp"
#include "relab/core/fixture.hpp"
#include "relab/core/oracle.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace relab {

// Thrown inside checkers when the oracle answers Incomp; converted to a BasicFail verdict.
struct IncomparableFound {
  AnyPoint a;
  AnyPoint b;
};

Verdict incomparable_verdict(const IncomparableFound& e, double resolution);

// Comparison that throws IncomparableFound instead of returning Incomp.
Comparison compare_complete(const ComparisonOracle& oracle, const Point& a, const Point& b);

struct SamplePool {
  // Hint points first, then the dyadic lattice, then jitter points.
  std::vector<Point> points;
  // Hint points followed by a seeded subset of `points`, used as probe limits.
  std::vector<Point> limits;
  double pitch = 0.0;
};

SamplePool build_pool(const Domain& domain, const CheckConfig& cfg, const Hints& hints);

std::mt19937_64 checker_rng(const CheckConfig& cfg, std::uint64_t salt);

// Unit directions: +-e_i, +-main diagonal, seeded random ones and hint directions,
// deduplicated. axes_only keeps +-e_i.
std::vector<Point> direction_bundle(int n, const CheckConfig& cfg, const Hints& hints, bool axes_only);

// z +- s e_i and z +- s (1,...,1)/sqrt(n) for s = width 2^-j >= min_step, filtered by the domain.
std::vector<Point> separator_ladder(const Domain& domain, const Point& z, double min_step = 0.0);

// limit + step 2^-k dir, k = 0..depth.
std::vector<Point> approach_sequence(const Point& limit, const Point& dir, double step, int depth);

using Path = std::function<Point(double)>;
using Membership = std::function<bool(const Point&)>;

enum class CrossingKind { Indifferent, Crossing, Gap };

struct Crossing {
  CrossingKind kind = CrossingKind::Crossing;
  double t = 0.0;
  double t_succ = 0.0;
  double t_prec = 0.0;
  Point succ_end;
  Point prec_end;
  int phase1_calls = 0;
  int calls = 0;
  // "stable" or "separator" for gaps
  std::string certificate;
  std::vector<ComparisonRecord> evidence;
};

struct CrossingOptions {
  double tol = 1e-12;
  int max_iter = 200;
  int window = 16;
};

// Bisects between path(t_succ) > target > path(t_prec). A bracket that closes without an
// Indiff hit is a Gap only when certified: both sides mutually indifferent over their last
// `window` moves, or monotone histories plus a separator strictly between target and one end.
Crossing resolve_crossing(const ComparisonOracle& oracle, const Path& path, double t_succ, double t_prec,
                          const Point& target, const CrossingOptions& opts, const std::vector<Point>& separators);

// Bracketed: both sides seen, crossings not yet resolved.
enum class PathOutcome { Solved, Missed, OneSided, Empty, Bracketed };

struct PathScan {
  PathOutcome outcome = PathOutcome::Empty;
  double t = 0.0;
  // Side of every scanned point relative to the target when OneSided.
  Comparison side = Comparison::Indiff;
  std::vector<Crossing> gaps;
  std::vector<double> ts;
  std::vector<Comparison> cs;
  bool has_above = false;
  bool has_below = false;
  // Tolerance-phase calls of the first resolved crossing.
  int phase1_calls = 0;
};

// Sampling pass of scan_path: Solved on an Indiff point, else OneSided, Bracketed or Empty.
PathScan sample_path(const ComparisonOracle& oracle, const Path& path, double t0, double t1, int steps,
                     const Point& target, const Membership& inside);

// Resolves the sign changes of a Bracketed scan into Solved or Missed.
void resolve_scan(const ComparisonOracle& oracle, const Path& path, const Point& target, const CrossingOptions& opts,
                  const std::vector<Point>& separators, PathScan& scan, int max_crossings = 64);

// Scans t0..t1 at `steps` intervals, skipping points outside `inside`, then resolves sign changes.
PathScan scan_path(const ComparisonOracle& oracle, const Path& path, double t0, double t1, int steps,
                   const Point& target, const CrossingOptions& opts, const Membership& inside,
                   const std::vector<Point>& separators, int max_crossings = 64);

CrossingOptions crossing_options(const CheckConfig& cfg);

}  // namespace relab
