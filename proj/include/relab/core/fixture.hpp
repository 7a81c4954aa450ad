#pragma once

#include "relab/core/domain.hpp"
#include "relab/core/oracle.hpp"
#include "relab/core/profile.hpp"
#include "relab/core/properties.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace relab {

// Named points that make a fixture's counterexamples reachable by sampling.
struct Hints {
  std::vector<Point> points;
  std::vector<Point> directions;
  // (x, y, z) triples in the order the checkers read them: x > y pairs for Archimedean,
  // x > z > y sandwiches for Wold, (x, y, z) mixtures {lambda : x lambda y >= z}.
  std::vector<std::array<Point, 3>> triples;
};

struct Fixture {
  std::string name;
  ComparisonOracle oracle;
  Domain domain;
  AssumptionProfile profile;
  std::vector<std::pair<std::string, VerdictKind>> expected;
  std::string notes;
  Hints hints;
  // 0-based coordinate set for stronger restricted solvability; empty disables it.
  std::vector<int> stronger_rs_coords;
};

// Throws CatalogueError listing valid names.
Fixture fixture(const std::string& name);
std::vector<std::string> fixture_names();

Fixture make_linear_sum(int n, const Domain& domain);
Fixture make_min_util(int n, const Domain& domain);
Fixture make_max_util(int n, const Domain& domain);
Fixture make_sum_util(int n, const Domain& domain);

}  // namespace relab
