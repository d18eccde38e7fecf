#ifndef LINEHAMD_FACTORIZE_HPP
#define LINEHAMD_FACTORIZE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "linehamd/graph.hpp"

namespace linehamd {

enum class SearchStatus { found, none, budget_exceeded };

inline constexpr long long kDefaultNodeBudget = 10'000'000;

// One oriented 2-factor: a permutation of V(G) whose cycles follow graph edges.
struct OrientedTwoFactor {
  std::vector<int> successor;  // vertex -> next vertex
  std::vector<int> arc_edge;   // vertex -> edge id of the arc (v, successor[v])

  int size() const { return static_cast<int>(successor.size()); }
  std::vector<VertexPair> undirected_edges() const;
  bool is_single_cycle() const;
};

// Ordered factors F_0..F_{n-2}, F_inf (last), plus the 1-factor F in odd mode.
struct DirectedTwoFactorisation {
  std::vector<OrientedTwoFactor> factors;   // size n; factors[n-1] is F_inf
  std::vector<int> matching_edge;           // odd mode: vertex -> edge id in F; empty otherwise

  int n() const { return static_cast<int>(factors.size()); }
  bool odd_mode() const { return !matching_edge.empty(); }
  const OrientedTwoFactor& f_inf() const { return factors.back(); }
  std::vector<VertexPair> matching_pairs(const Graph& g) const;
};

struct HamiltonResult {
  SearchStatus status = SearchStatus::none;
  std::vector<int> cycle;  // vertex sequence, first vertex is 0
};

// Exhaustive backtracking; "none" is definitive, "budget_exceeded" is not.
HamiltonResult find_hamilton_cycle(const Graph& g, long long node_budget = kDefaultNodeBudget);

// Enumerates Hamilton cycles in deterministic order; visit returns true to stop.
// Result is "found" if some visit returned true, else none/budget_exceeded.
SearchStatus for_each_hamilton_cycle(const Graph& g, long long node_budget,
                                     const std::function<bool(const std::vector<int>&)>& visit);

struct ThreeFactorResult {
  SearchStatus status = SearchStatus::none;
  std::vector<int> cycle;
  std::vector<VertexPair> matching;  // disjoint from the cycle
};

// Hamilton cycle C plus perfect matching F with C ∩ F = ∅ (the 3-factor is C ∪ F).
ThreeFactorResult find_hamiltonian_3factor(const Graph& g,
                                           long long node_budget = kDefaultNodeBudget);

// Perfect matching avoiding `forbidden` edges; deterministic backtracking.
std::optional<std::vector<VertexPair>> find_perfect_matching(
    const Graph& g, const std::vector<VertexPair>& forbidden = {});

// Orients every edge so |indeg(v) - outdeg(v)| <= 1 for all v. No loops allowed.
std::vector<VertexPair> balanced_orientation(const Multigraph& m);

// Petersen 2-factorisation with F_inf = the given Hamilton cycle (oriented along it).
DirectedTwoFactorisation petersen_2_factorize(const Graph& g, const std::vector<int>& ham);

// Full directed 2-factorisation for the pipeline: even mode uses G itself;
// odd mode removes the matching first and records it.
DirectedTwoFactorisation build_directed_2_factorisation(const Graph& g,
                                                        const std::vector<int>& ham,
                                                        const std::vector<VertexPair>& matching);

struct LinkingPartition {
  std::vector<char> in_u;  // 1 -> U, 0 -> U'
};

// Given spanning factors (min degree >= 1, at most two disconnected), splits V into
// {U, U'} with both parts meeting every component of every factor.
LinkingPartition linking_partition(int vertex_count,
                                   const std::vector<std::vector<VertexPair>>& factors);

}  // namespace linehamd

#endif
