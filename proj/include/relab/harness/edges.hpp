#pragma once

#include "relab/checkers/verdict.hpp"
#include "relab/core/profile.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace relab {

enum class Axiom { Continuity, Wold, WeakWold, Mixture, Archimedean, Separate, RestrictedSolv, UnrestrictedSolv, StrongerRS };

const std::vector<Axiom>& all_axioms();
// Verdict key, e.g. "restricted_solvability".
std::string_view to_key(Axiom a);
std::optional<Axiom> axiom_from_key(std::string_view key);

// Edge group that produced an implication.
enum class EdgeSource { Base, FiniteClique, SeparateEquivalence, StrongBoundedEquivalence };

std::string_view to_string(EdgeSource s);

struct ImplicationEdge {
  Axiom from;
  Axiom to;
  EdgeSource source;
};

// Base edges need a complete, transitive relation on a convex domain; equivalence groups are
// added when the profile meets their hypotheses. Duplicate (from, to) pairs keep the first
// source.
std::vector<ImplicationEdge> implication_edges(const AssumptionProfile& profile);
std::vector<ImplicationEdge> base_edges();

struct Inconsistency {
  ImplicationEdge edge;
  std::string detail;
};

// Every edge with from = Holds and to = Violated; Inapplicable or missing verdicts are skipped.
std::vector<Inconsistency> check_consistency(const std::map<std::string, Verdict>& verdicts,
                                             const std::vector<ImplicationEdge>& edges);

}  // namespace relab
