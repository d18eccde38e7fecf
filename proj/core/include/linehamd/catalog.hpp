#ifndef LINEHAMD_CATALOG_HPP
#define LINEHAMD_CATALOG_HPP

#include <vector>

#include "linehamd/fragments.hpp"

namespace linehamd {

// Decomposition of K_{A_n ∪ B_n} (even mode) or K_{A_n ∪ B_n ∪ {c}} (odd
// mode) into Hamilton-fragment plans.
struct Catalog {
  int n = 0;
  bool odd_mode = false;
  std::vector<FragmentPlan> plans;
  // Facts established while constructing the parametric cases (orbit vectors,
  // rho-fixedness of I, edge-orbit distinctness, the Q-disjointness property).
  std::vector<CheckResult> construction_checks;

  int complete_edge_count() const {
    int v = 2 * n + (odd_mode ? 1 : 0);
    return v * (v - 1) / 2;
  }
  int total_factor_count() const {
    int total = 0;
    for (const auto& p : plans) total += p.factor_count();
    return total;
  }
};

Catalog catalog_even(int n);
Catalog catalog_odd(int n);
Catalog make_catalog(int n, bool odd_mode);

// Per-orbit-class edge counts for the parametric constructions. `secondary`
// is used only when n is odd (the primed classes).
struct OrbitProfile {
  std::vector<int> primary;
  std::vector<int> secondary;
};

// Classifies h's edges into the orbit classes of its (n, mode) parametric
// case; throws if an edge belongs to the reserved graph I.
OrbitProfile orbit_vector(const FragmentGraph& h);

// The reserved subgraph I of the parametric case for (n, mode).
FragmentGraph parametric_reserved(int n, bool odd_mode);

struct CatalogReport {
  bool pass = false;
  std::vector<CheckResult> global_checks;
  std::vector<PlanReport> plan_reports;
};

// Edge-disjointness, exact cover of the complete graph, factor-count law,
// construction checks, and every plan's precondition report.
CatalogReport check_catalog(const Catalog& catalog);

}  // namespace linehamd

#endif
