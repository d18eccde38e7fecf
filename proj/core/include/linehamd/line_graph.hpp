#ifndef LINEHAMD_LINE_GRAPH_HPP
#define LINEHAMD_LINE_GRAPH_HPP

#include <vector>

#include "linehamd/graph.hpp"

namespace linehamd {

// Line graph L(G): one vertex per edge of G, adjacency iff base edges share an
// endpoint. Line vertices are identified by base edge index.
class LineGraph {
 public:
  explicit LineGraph(Graph base);

  const Graph& base() const { return base_; }
  int vertex_count() const { return base_.edge_count(); }
  long long edge_count() const { return edge_count_; }
  const std::vector<int>& neighbors(int line_vertex) const { return adjacency_[line_vertex]; }
  bool adjacent(int e1, int e2) const;

  // L(G)_v: the line vertices whose base edges meet v; a clique in L(G).
  const std::vector<int>& clique(int base_vertex) const { return cliques_[base_vertex]; }

  Graph as_graph() const;

 private:
  Graph base_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> cliques_;
  long long edge_count_ = 0;
};

}  // namespace linehamd

#endif
