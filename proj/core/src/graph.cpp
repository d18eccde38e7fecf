#include "linehamd/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace linehamd {

Graph Graph::build(int vertex_count, const std::vector<VertexPair>& edge_pairs) {
  if (vertex_count < 0) throw ValidationError("vertex count must be non-negative");
  Graph g;
  g.vertex_count_ = vertex_count;
  g.adjacency_.resize(vertex_count);
  std::set<VertexPair> seen;
  for (const auto& [u, v] : edge_pairs) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      throw ValidationError("edge endpoint out of range: (" + std::to_string(u) + "," +
                            std::to_string(v) + ")");
    if (u == v) throw ValidationError("loop edge at vertex " + std::to_string(u));
    VertexPair key = normalized(u, v);
    if (!seen.insert(key).second)
      throw ValidationError("duplicate edge (" + std::to_string(key.first) + "," +
                            std::to_string(key.second) + ")");
    int e = static_cast<int>(g.edges_.size());
    g.edges_.push_back(key);
    g.adjacency_[key.first].emplace_back(key.second, e);
    g.adjacency_[key.second].emplace_back(key.first, e);
  }
  return g;
}

bool Graph::is_regular() const {
  for (int v = 1; v < vertex_count_; ++v)
    if (degree(v) != degree(0)) return false;
  return true;
}

int Graph::edge_between(int u, int v) const {
  if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_) return -1;
  for (const auto& [w, e] : adjacency_[u])
    if (w == v) return e;
  return -1;
}

void Multigraph::add_edge(int u, int v) {
  if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_)
    throw ValidationError("multigraph edge endpoint out of range");
  edges_.push_back(normalized(u, v));
}

void Multigraph::remove_one(int u, int v) {
  VertexPair key = normalized(u, v);
  auto it = std::find(edges_.begin(), edges_.end(), key);
  if (it == edges_.end()) throw ValidationError("edge not present in multigraph");
  edges_.erase(it);
}

int Multigraph::multiplicity(int u, int v) const {
  VertexPair key = normalized(u, v);
  return static_cast<int>(std::count(edges_.begin(), edges_.end(), key));
}

int Multigraph::degree(int v) const {
  int d = 0;
  for (const auto& [a, b] : edges_) {
    if (a == v) ++d;
    if (b == v) ++d;
  }
  return d;
}

std::vector<VertexPair> Multigraph::sorted_edges() const {
  std::vector<VertexPair> out = edges_;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> component_labels(int vertex_count, const std::vector<VertexPair>& edges) {
  std::vector<int> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& [u, v] : edges) {
    int pu = find(u), pv = find(v);
    if (pu != pv) parent[std::max(pu, pv)] = std::min(pu, pv);
  }
  std::vector<int> label(vertex_count, -1);
  int next = 0;
  for (int v = 0; v < vertex_count; ++v) {
    int root = find(v);
    if (label[root] < 0) label[root] = next++;
    label[v] = label[root];
  }
  return label;
}

int component_count(const std::vector<int>& labels) {
  int m = -1;
  for (int l : labels) m = std::max(m, l);
  return m + 1;
}

std::vector<std::vector<int>> edge_induced_components(const std::vector<VertexPair>& edges) {
  std::map<int, int> ids;  // vertex -> dense id
  for (const auto& [u, v] : edges) {
    ids.emplace(u, 0);
    ids.emplace(v, 0);
  }
  int n = 0;
  for (auto& [v, id] : ids) id = n++;
  std::vector<VertexPair> dense;
  dense.reserve(edges.size());
  for (const auto& [u, v] : edges) dense.emplace_back(ids.at(u), ids.at(v));
  std::vector<int> label = component_labels(n, dense);
  std::vector<std::vector<int>> comps(component_count(label));
  for (const auto& [v, id] : ids) comps[label[id]].push_back(v);
  return comps;
}

}  // namespace linehamd
