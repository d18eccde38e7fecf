#include "linehamd/line_graph.hpp"

#include <algorithm>

namespace linehamd {

LineGraph::LineGraph(Graph base) : base_(std::move(base)) {
  int m = base_.edge_count();
  adjacency_.resize(m);
  cliques_.resize(base_.vertex_count());
  for (int v = 0; v < base_.vertex_count(); ++v) {
    auto& clique = cliques_[v];
    for (const auto& [w, e] : base_.adjacency(v)) clique.push_back(e);
    std::sort(clique.begin(), clique.end());
    for (size_t i = 0; i < clique.size(); ++i)
      for (size_t j = i + 1; j < clique.size(); ++j) {
        adjacency_[clique[i]].push_back(clique[j]);
        adjacency_[clique[j]].push_back(clique[i]);
        ++edge_count_;
      }
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

bool LineGraph::adjacent(int e1, int e2) const {
  if (e1 == e2) return false;
  const auto& nb = adjacency_[e1];
  return std::binary_search(nb.begin(), nb.end(), e2);
}

Graph LineGraph::as_graph() const {
  std::vector<VertexPair> pairs;
  for (int v = 0; v < vertex_count(); ++v)
    for (int w : adjacency_[v])
      if (v < w) pairs.emplace_back(v, w);
  return Graph::build(vertex_count(), pairs);
}

}  // namespace linehamd
