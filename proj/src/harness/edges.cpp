#include "relab/harness/edges.hpp"

#include "relab/core/properties.hpp"

#include <algorithm>

namespace relab {

namespace {

using A = Axiom;

void add(std::vector<ImplicationEdge>& out, A from, A to, EdgeSource s) {
  bool seen = std::any_of(out.begin(), out.end(),
                          [&](const ImplicationEdge& e) { return e.from == from && e.to == to; });
  if (!seen) out.push_back({from, to, s});
}

void clique(std::vector<ImplicationEdge>& out, const std::vector<A>& members, EdgeSource s) {
  for (A a : members)
    for (A b : members)
      if (a != b) add(out, a, b, s);
}

}  // namespace

const std::vector<Axiom>& all_axioms() {
  static const std::vector<Axiom> v = {A::Continuity,  A::Wold,     A::WeakWold,       A::Mixture,
                                       A::Archimedean, A::Separate, A::RestrictedSolv, A::UnrestrictedSolv,
                                       A::StrongerRS};
  return v;
}

std::string_view to_key(Axiom a) {
  switch (a) {
    case A::Continuity: return keys::continuity;
    case A::Wold: return keys::wold;
    case A::WeakWold: return keys::weak_wold;
    case A::Mixture: return keys::mixture;
    case A::Archimedean: return keys::archimedean;
    case A::Separate: return keys::separate;
    case A::RestrictedSolv: return keys::restricted_solvability;
    case A::UnrestrictedSolv: return keys::unrestricted_solvability;
    case A::StrongerRS: return keys::stronger_rs;
  }
  return "?";
}

std::optional<Axiom> axiom_from_key(std::string_view key) {
  for (Axiom a : all_axioms())
    if (to_key(a) == key) return a;
  return std::nullopt;
}

std::string_view to_string(EdgeSource s) {
  switch (s) {
    case EdgeSource::Base: return "base";
    case EdgeSource::FiniteClique: return "finite_clique";
    case EdgeSource::SeparateEquivalence: return "separate_equivalence";
    case EdgeSource::StrongBoundedEquivalence: return "strong_bounded_equivalence";
  }
  return "?";
}

std::vector<ImplicationEdge> base_edges() {
  const EdgeSource b = EdgeSource::Base;
  return {{A::Continuity, A::Wold, b},         {A::Wold, A::WeakWold, b},
          {A::WeakWold, A::RestrictedSolv, b}, {A::WeakWold, A::Archimedean, b},
          {A::Continuity, A::Mixture, b},      {A::Mixture, A::Separate, b},
          {A::Mixture, A::WeakWold, b},        {A::Mixture, A::Archimedean, b},
          {A::Separate, A::RestrictedSolv, b}, {A::UnrestrictedSolv, A::RestrictedSolv, b}};
}

std::vector<ImplicationEdge> implication_edges(const AssumptionProfile& p) {
  std::vector<ImplicationEdge> out;
  if (!(p.complete && p.transitive && p.convex_domain)) return out;
  out = base_edges();
  if (p.weakly_monotone && p.order_dense && p.order_bounded && p.interior && p.finite_dimensional)
    clique(out,
           {A::Continuity, A::Wold, A::WeakWold, A::Mixture, A::Archimedean, A::Separate, A::RestrictedSolv},
           EdgeSource::FiniteClique);
  if (p.finite_dimensional && p.interior && p.order_bounded && p.monotone_coordinate_count >= p.dimension - 1)
    clique(out, {A::Separate, A::Continuity}, EdgeSource::SeparateEquivalence);
  if (p.strong_order_bounded && p.weakly_monotone && p.order_dense) {
    clique(out, {A::WeakWold, A::Mixture, A::Archimedean}, EdgeSource::StrongBoundedEquivalence);
    clique(out, {A::Separate, A::RestrictedSolv}, EdgeSource::StrongBoundedEquivalence);
  }
  return out;
}

std::vector<Inconsistency> check_consistency(const std::map<std::string, Verdict>& verdicts,
                                             const std::vector<ImplicationEdge>& edges) {
  auto kind = [&](Axiom a) -> std::optional<VerdictKind> {
    auto it = verdicts.find(std::string(to_key(a)));
    if (it == verdicts.end()) return std::nullopt;
    return it->second.kind;
  };
  std::vector<Inconsistency> out;
  for (const ImplicationEdge& e : edges) {
    if (kind(e.from) == VerdictKind::Holds && kind(e.to) == VerdictKind::Violated)
      out.push_back({e, std::string(to_key(e.from)) + " holds but " + std::string(to_key(e.to)) + " is violated (" +
                            std::string(to_string(e.source)) + ")"});
  }
  return out;
}

}  // namespace relab
