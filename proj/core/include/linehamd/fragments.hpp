#ifndef LINEHAMD_FRAGMENTS_HPP
#define LINEHAMD_FRAGMENTS_HPP

#include <string>
#include <variant>
#include <vector>

#include "linehamd/labels.hpp"
#include "linehamd/repair.hpp"

namespace linehamd {

// Pseudo factor id for the 1-factor F when naming linking sets.
inline constexpr int kMatchingFactor = -1;

// Pieces X_1..X_r; J_1/J_2 swap X_1,X_2 across the partition, J_k = X_k for
// k >= 3. Partition links {F_s, F_t, F_inf}.
struct EvenMultiRecipe {
  std::vector<FragmentGraph> x;
  int s = 0;
  int t = 0;
};

// Decompositions {X1,X2,X3} and {X1',X2',X3}; J_1 = X_1/X_2', J_2 = X_2/X_1',
// J_3 = X_3 everywhere. Partition links {F_s, F_t, F_inf}.
struct EvenSwapRecipe {
  FragmentGraph x1, x2, x3, x1p, x2p;
  int s = 0;
  int t = 0;
};

// J_1 = S ∪ R and J_2 = S' ∪ R' everywhere; no partition.
struct EvenEasyRecipe {
  FragmentGraph s, sp, r, rp;
};

// J_1 = S∪R∪C / S∪R∪C', J_2 = S'∪R'∪C' / S'∪R'∪C across a partition linking
// {F_j : j in T}.
struct EvenCCRecipe {
  FragmentGraph s, sp, r, rp, c, cp;
  std::vector<int> t_set;
};

// Odd-mode analogue with the S/T re-decomposition; partition links {F, F_t}.
struct OddCCRecipe {
  FragmentGraph s, sp, t_piece, tp, r, rp, c, cp;
  int t = 0;
};

// Two halves, each three J factors: the sub-recipes H_1, H_2 plus the
// triangle X/X' and the long paths P_1, P_2. Partition links {F, F_t}.
struct OddBigRecipe {
  FragmentGraph x, xp, p1, p2;
  OddCCRecipe h1, h2;
  int t = 0;
  int u1_label = 0;  // encoded label in V(P_1)
  int u2_label = 0;  // encoded label in V(P_2)
};

// Four decompositions {X_i, Y_i}, {X_i', Y_i'}; J_1 = X_1/X_1', J_2 = Y_1/Y_1'
// with the second decomposition as the repair fallback. Partition links
// {F, F_t}.
struct FourDecompRecipe {
  FragmentGraph x1, y1, x1p, y1p, x2, y2, x2p, y2p;
  int t = 0;
};

// Bespoke layouts: per vertex class (driven by 0, 1 or 2 linking partitions,
// or the arc-pair rule), the piece each J factor takes.
struct DirectRecipe {
  // Each entry lists the factor ids the partition must link (kMatchingFactor
  // stands for F). Size 0, 1 or 2.
  std::vector<std::vector<int>> partition_links;
  // Even n=2 rule: one vertex per F_0-component in U, its successor in U'.
  bool arc_pair_mode = false;
  int arc_pair_factor = 0;
  // pieces[class][j]: class order is ALL; U, U'; or UV, U'V, UV', U'V'.
  // In arc-pair mode the classes are REST, U, U'.
  std::vector<std::vector<FragmentGraph>> pieces;
};

using Recipe = std::variant<EvenMultiRecipe, EvenSwapRecipe, EvenEasyRecipe, EvenCCRecipe,
                            OddCCRecipe, OddBigRecipe, FourDecompRecipe, DirectRecipe>;

// A connector family cited by the realization lemma, validated abstractly.
struct DesignatedConnector {
  std::string name;
  std::vector<std::vector<VertexPair>> sets;  // encoded label pairs, one set per factor
  std::vector<int> targets;                   // encoded labels
};

struct FragmentPlan {
  std::string name;
  FragmentGraph fragment;
  Recipe recipe;
  std::vector<DesignatedConnector> connectors;

  int factor_count() const;  // number of Hamilton cycles this plan yields
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct PlanReport {
  std::string plan_name;
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Evaluates every numbered condition of the plan's lemma, including abstract
// validation of the designated connector families.
PlanReport check_plan_preconditions(const FragmentPlan& plan, int n, bool odd_mode);

// The pre-repair working factors plus the repair schedule along F_inf.
struct AssembledFragment {
  FactorState state;
  RepairSchedule schedule;
};

// One OddBig plan assembles two of these (the L and L' halves); all other
// recipes assemble exactly one.
std::vector<AssembledFragment> assemble_j_factors(const Graph& g, const LabelMap& labels,
                                                  const DirectedTwoFactorisation& dft,
                                                  const FragmentPlan& plan);

// Runs the repairs; returns one Hamilton cycle of the realized subgraph per
// J factor, each spanning all line vertices.
std::vector<std::vector<int>> realize_fragment(const Graph& g, const LabelMap& labels,
                                               const DirectedTwoFactorisation& dft,
                                               const FragmentPlan& plan);

}  // namespace linehamd

#endif
