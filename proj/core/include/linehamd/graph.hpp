#ifndef LINEHAMD_GRAPH_HPP
#define LINEHAMD_GRAPH_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace linehamd {

// Input or argument violates a documented precondition.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A "cannot happen" condition: signals a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

using VertexPair = std::pair<int, int>;

inline VertexPair normalized(int u, int v) {
  return u < v ? VertexPair{u, v} : VertexPair{v, u};
}
inline VertexPair normalized(VertexPair e) { return normalized(e.first, e.second); }

// Simple undirected graph with indexed edges.
class Graph {
 public:
  Graph() = default;

  // Validates: vertices in range, no loops, no duplicate edges.
  static Graph build(int vertex_count, const std::vector<VertexPair>& edge_pairs);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const VertexPair& edge(int e) const { return edges_[e]; }
  const std::vector<VertexPair>& edges() const { return edges_; }

  // (neighbor, edge index) pairs.
  const std::vector<std::pair<int, int>>& adjacency(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  bool is_regular() const;
  bool has_edge(int u, int v) const { return edge_between(u, v) >= 0; }
  int edge_between(int u, int v) const;  // edge index or -1
  int other_end(int e, int v) const {
    const auto& [a, b] = edges_[e];
    return v == a ? b : a;
  }

  bool operator==(const Graph& rhs) const {
    return vertex_count_ == rhs.vertex_count_ && edges_ == rhs.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<VertexPair> edges_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

// Undirected multigraph; loops allowed, multiplicities exact.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int vertex_count) : vertex_count_(vertex_count) {}

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<VertexPair>& edges() const { return edges_; }

  void add_edge(int u, int v);
  // Removes one copy of (u,v); throws if absent.
  void remove_one(int u, int v);
  int multiplicity(int u, int v) const;
  // Loops count 2 toward the degree.
  int degree(int v) const;
  bool has_loop(int v) const { return multiplicity(v, v) > 0; }

  // Sorted copy of the edge multiset (for comparisons).
  std::vector<VertexPair> sorted_edges() const;

  bool same_edge_multiset(const Multigraph& rhs) const {
    return vertex_count_ == rhs.vertex_count_ && sorted_edges() == rhs.sorted_edges();
  }

 private:
  int vertex_count_ = 0;
  std::vector<VertexPair> edges_;  // normalized pairs
};

// Component label per vertex (labels are 0-based, assigned in vertex order).
std::vector<int> component_labels(int vertex_count, const std::vector<VertexPair>& edges);
int component_count(const std::vector<int>& labels);

// Components of the edge-induced subgraph: isolated vertices are ignored.
// Returns one sorted vertex list per component, in order of smallest member.
std::vector<std::vector<int>> edge_induced_components(const std::vector<VertexPair>& edges);

}  // namespace linehamd

#endif
