#pragma once

#include "relab/core/domain.hpp"

#include <cstdint>
#include <vector>

namespace relab {

// Lattice lo + k*resolution per axis (first axis slowest) intersected with the domain,
// followed by `jitter` seeded points. Jitter coordinates sit on a dyadic sub-lattice of
// pitch width/2^20 so sums of sampled coordinates stay exact.
std::vector<Point> sample_grid(const Domain& domain, double resolution, std::uint64_t seed,
                               std::size_t jitter = 0);

// Number of lattice points per axis for the given pitch.
std::vector<long> lattice_shape(const Domain& domain, double resolution);

// Random point of the domain, or nothing after a bounded number of rejections.
std::vector<Point> random_points(const Domain& domain, std::uint64_t seed, std::size_t count);

// Exact sample of a domain with rational-only coordinates: lattice points converted exactly,
// plus copies shifted by +-sqrt2 on coordinates that admit irrationals.
std::vector<ExactPoint> sample_grid_exact(const Domain& domain, double resolution);

}  // namespace relab
