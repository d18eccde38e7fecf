#ifndef LINEHAMD_REPAIR_HPP
#define LINEHAMD_REPAIR_HPP

#include <array>
#include <optional>
#include <vector>

#include "linehamd/graph.hpp"

namespace linehamd {

// Reallocation search exhausted without finding a valid assignment. Signals a
// bug upstream (the sets were not a connector in this context).
class NoValidReallocation : public InternalError {
 public:
  explicit NoValidReallocation(const std::string& what) : InternalError(what) {}
};

// r spanning 2-regular, pairwise edge-disjoint working factors over a common
// vertex set. Immutable; repairs return new states.
class FactorState {
 public:
  static FactorState build(int vertex_count, std::vector<std::vector<VertexPair>> factors);

  int vertex_count() const { return vertex_count_; }
  int factor_count() const { return static_cast<int>(neighbors_.size()); }
  const std::vector<std::array<int, 2>>& adjacency(int k) const { return neighbors_[k]; }
  bool has_edge(int k, int u, int v) const;
  std::vector<VertexPair> factor_edges(int k) const;  // normalized, sorted
  const std::vector<int>& components(int k) const { return components_[k]; }
  int component_count(int k) const;
  bool connected(int k) const { return component_count(k) == 1; }
  bool all_connected() const;
  // Walks the (connected) factor into a cycle starting at the lowest vertex.
  std::vector<int> cycle_of(int k) const;

 private:
  friend FactorState apply_connector(const FactorState&, const struct ConnectorInstance&);
  int vertex_count_ = 0;
  std::vector<std::vector<std::array<int, 2>>> neighbors_;  // [factor][vertex] -> 2 neighbors
  std::vector<std::vector<int>> components_;
  void refresh_components(int k);
};

// Edge sets E_1..E_r (E_i inside factor i) to reallocate, and the target
// vertex set V that must end up in one component of every factor.
struct ConnectorInstance {
  std::vector<std::vector<VertexPair>> edge_sets;
  std::vector<int> targets;
};

// Reallocates the edges of ∪E_i so that (a) untouched edges stay put,
// (b) every factor remains spanning 2-regular, (c) co-component pairs stay
// co-component, and (d) all of V shares a component in every factor.
FactorState apply_connector(const FactorState& state, const ConnectorInstance& c);

struct RepairSchedule {
  struct Entry {
    std::vector<VertexPair> subgraph_edges;  // σ_{v_i}(H); split per factor on the fly
    std::vector<int> targets;                // V_i
  };
  std::vector<Entry> entries;
};

// Applies each entry's induced connector in order; asserts the final factors
// are all connected.
FactorState many_repairs(FactorState state, const RepairSchedule& schedule);

// One abstract way the per-factor path endpoints can be joined into cycles by
// the rest of each factor: a perfect matching on endpoints, per factor.
struct LinkagePattern {
  std::vector<std::vector<VertexPair>> joins;
};

// All endpoint matchings per factor, as a cross product. Throws if some E_i
// contains a cycle.
std::vector<LinkagePattern> enumerate_linkage_patterns(
    const std::vector<std::vector<VertexPair>>& edge_sets);

struct ConnectorReport {
  bool all_ok = true;
  long long patterns_checked = 0;
  std::vector<LinkagePattern> failures;
};

// Checks every linkage pattern for a valid reallocation; computationally
// re-proves connector-hood of the given sets.
ConnectorReport validate_connector(const std::vector<std::vector<VertexPair>>& edge_sets,
                                   const std::vector<int>& targets);

// Exposed for tests: true iff assigning edge i of `edges` to factor
// `assignment[i]` satisfies (a)-(d) under the given linkage pattern.
bool check_reallocation(const std::vector<std::vector<VertexPair>>& edge_sets,
                        const LinkagePattern& pattern, const std::vector<int>& targets,
                        const std::vector<VertexPair>& edges, const std::vector<int>& assignment);

}  // namespace linehamd

#endif
