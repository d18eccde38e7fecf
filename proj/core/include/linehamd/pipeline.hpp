#ifndef LINEHAMD_PIPELINE_HPP
#define LINEHAMD_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linehamd/catalog.hpp"
#include "linehamd/line_graph.hpp"

namespace linehamd {

// Required structure absent (not regular, no Hamilton cycle / 3-factor found).
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

struct Decomposition {
  std::vector<std::vector<int>> cycles;  // line vertices = edge ids of the base graph
};

struct DecomposeOptions {
  std::vector<int> ham;                 // optional supplied Hamilton cycle (of G or G-F)
  std::vector<VertexPair> matching;     // optional supplied 1-factor (odd degree)
  long long node_budget = kDefaultNodeBudget;
};

// The full pipeline: factorize, label, fetch the catalog, realize every
// fragment plan. Output has deg(G)-1 cycles, each of length |E(G)|.
Decomposition decompose_line_graph(const Graph& g, const DecomposeOptions& options = {});

struct VerificationReport {
  bool pass = false;
  bool regularity = false;    // each cycle is a genuine cycle of L (distinct, adjacent)
  bool connectivity = false;  // each cycle spans every vertex of L
  bool partition = false;     // edge sets pairwise disjoint and cover E(L)
  bool cycle_count = false;   // deg(L)/2 cycles
  bool cycle_length = false;  // each |V(L)| long
  std::string detail;
};

// Construction-independent checker.
VerificationReport verify_decomposition(const LineGraph& l, const Decomposition& d);

struct OracleResult {
  SearchStatus status = SearchStatus::none;
  Decomposition decomposition;
};

// Exhaustive edge-disjoint Hamilton-cycle packing with symmetry pruning.
OracleResult brute_force_hamilton_decomposition(const Graph& h,
                                                long long node_budget = kDefaultNodeBudget);

struct CrossCheckReport {
  bool pipeline_ok = false;
  bool verified = false;
  SearchStatus oracle_status = SearchStatus::none;
  bool agree = false;  // pipeline success implies oracle existence (when oracle terminated)
};

CrossCheckReport cross_check(const Graph& g, long long oracle_budget = kDefaultNodeBudget);

// Seeded test-graph generators (planted structures are returned).
struct PlantedGraph {
  Graph graph;
  std::vector<int> ham;
  std::vector<VertexPair> matching;  // non-empty only for odd degree
};

PlantedGraph random_regular_hamiltonian(int vertices, int degree, std::uint64_t seed);
Graph complete_graph(int vertices);
Graph circulant_graph(int vertices, const std::vector<int>& offsets);

}  // namespace linehamd

#endif
