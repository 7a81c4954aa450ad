#include "relab/core/sampling.hpp"

#include "relab/core/errors.hpp"

#include <cmath>
#include <random>

namespace relab {

namespace {

constexpr long kMaxLattice = 5'000'000;
constexpr std::uint64_t kJitterDenominator = 1ULL << 20;

Point snapped_random(const Domain& d, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, kJitterDenominator);
  Point p(d.dimension());
  for (int i = 0; i < d.dimension(); ++i) {
    double w = d.hi()[i] - d.lo()[i];
    p[i] = d.lo()[i] + w * static_cast<double>(pick(rng)) / static_cast<double>(kJitterDenominator);
  }
  return p;
}

}  // namespace

std::vector<long> lattice_shape(const Domain& domain, double resolution) {
  if (!(resolution > 0.0) || !std::isfinite(resolution)) throw UsageError("sample_grid: resolution must be > 0");
  std::vector<long> shape(domain.dimension());
  double total = 1.0;
  for (int i = 0; i < domain.dimension(); ++i) {
    double steps = std::floor((domain.hi()[i] - domain.lo()[i]) / resolution + 1e-9);
    shape[i] = static_cast<long>(steps) + 1;
    total *= static_cast<double>(shape[i]);
  }
  if (total > static_cast<double>(kMaxLattice)) throw UsageError("sample_grid: lattice too large for resolution");
  return shape;
}

std::vector<Point> sample_grid(const Domain& domain, double resolution, std::uint64_t seed, std::size_t jitter) {
  std::vector<long> shape = lattice_shape(domain, resolution);
  const int n = domain.dimension();
  std::vector<Point> out;
  std::vector<long> idx(n, 0);
  Point p(n);
  while (true) {
    for (int i = 0; i < n; ++i) p[i] = domain.lo()[i] + static_cast<double>(idx[i]) * resolution;
    if (domain.contains(p)) out.push_back(p);
    int k = n - 1;
    while (k >= 0 && ++idx[k] == shape[k]) idx[k--] = 0;
    if (k < 0) break;
  }
  std::vector<Point> extra = random_points(domain, seed, jitter);
  out.insert(out.end(), extra.begin(), extra.end());
  if (out.empty()) {
    Point center = domain.diag(0.5);
    if (domain.contains(center)) out.push_back(center);
  }
  if (out.empty()) {
    out = random_points(domain, seed, 1);
  }
  if (out.empty()) throw RangeError("sample_grid: domain appears empty");
  return out;
}

std::vector<Point> random_points(const Domain& domain, std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<Point> out;
  std::size_t attempts = 0;
  while (out.size() < count && attempts < 64 * count + 64) {
    ++attempts;
    Point p = snapped_random(domain, rng);
    if (domain.contains(p)) out.push_back(std::move(p));
  }
  return out;
}

std::vector<ExactPoint> sample_grid_exact(const Domain& domain, double resolution) {
  Domain relaxed = Domain(domain.lo(), domain.hi(), domain.halfspaces(), domain.interior_only());
  std::vector<Point> lattice = sample_grid(relaxed, resolution, 0, 0);
  std::vector<ExactPoint> out;
  const QSqrt2 root2 = QSqrt2::sqrt2();
  for (const Point& p : lattice) {
    ExactPoint e = to_exact(p);
    if (domain.contains(e)) out.push_back(e);
    for (int i = 0; i < domain.dimension(); ++i) {
      if (domain.rational_only(i)) continue;
      for (int s : {1, -1}) {
        ExactPoint shifted = e;
        shifted[i] += s > 0 ? root2 : -root2;
        if (domain.contains(shifted)) out.push_back(std::move(shifted));
      }
    }
  }
  return out;
}

}  // namespace relab
