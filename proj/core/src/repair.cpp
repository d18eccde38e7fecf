#include "linehamd/repair.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace linehamd {

namespace {

constexpr long long kReallocationNodeBudget = 50'000'000;

// Union-find over a small dense label range.
struct TinyUF {
  std::vector<int> parent;
  explicit TinyUF(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

// The reallocation search shared by concrete application and abstract pattern
// validation. Vertices are local ids 0..T-1.
struct ReallocationProblem {
  int r = 0;
  int touched = 0;
  std::vector<VertexPair> edges;                          // local pairs, fixed order
  std::vector<std::vector<int>> demand;                   // [vertex][factor]
  std::vector<std::vector<int>> base_label;               // [factor][vertex], -1 if absent
  std::vector<int> label_count;                           // per factor
  std::vector<std::vector<std::vector<int>>> keep_groups; // per factor: label groups to keep merged
  std::vector<std::vector<int>> target_labels;            // per factor: labels of V
};

bool assignment_valid(const ReallocationProblem& p, const std::vector<int>& assignment) {
  for (int k = 0; k < p.r; ++k) {
    TinyUF uf(p.label_count[k]);
    for (size_t e = 0; e < p.edges.size(); ++e) {
      if (assignment[e] != k) continue;
      int lu = p.base_label[k][p.edges[e].first];
      int lv = p.base_label[k][p.edges[e].second];
      if (lu < 0 || lv < 0) return false;
      uf.unite(lu, lv);
    }
    for (const auto& group : p.keep_groups[k]) {
      int root = uf.find(group[0]);
      for (int lbl : group)
        if (uf.find(lbl) != root) return false;
    }
    if (!p.target_labels[k].empty()) {
      int root = uf.find(p.target_labels[k][0]);
      for (int lbl : p.target_labels[k])
        if (uf.find(lbl) != root) return false;
    }
  }
  return true;
}

std::optional<std::vector<int>> solve_reallocation(const ReallocationProblem& p) {
  std::vector<int> assignment(p.edges.size(), -1);
  std::vector<std::vector<int>> demand = p.demand;
  long long nodes = 0;

  std::function<bool(size_t)> dfs = [&](size_t idx) -> bool {
    if (++nodes > kReallocationNodeBudget)
      throw NoValidReallocation("reallocation search exceeded its node budget");
    if (idx == p.edges.size()) return assignment_valid(p, assignment);
    auto [u, v] = p.edges[idx];
    for (int k = 0; k < p.r; ++k) {
      if (demand[u][k] <= 0 || demand[v][k] <= 0) continue;
      --demand[u][k];
      --demand[v][k];
      assignment[idx] = k;
      if (dfs(idx + 1)) return true;
      assignment[idx] = -1;
      ++demand[u][k];
      ++demand[v][k];
    }
    return false;
  };
  if (dfs(0)) return assignment;
  return std::nullopt;
}

// Shared setup: local ids, ordered edge list, demands.
struct LocalIndex {
  std::vector<int> globals;  // local -> global
  std::map<int, int> to_local;

  int local(int g) const { return to_local.at(g); }
  bool contains(int g) const { return to_local.count(g) > 0; }
};

LocalIndex index_vertices(const std::vector<std::vector<VertexPair>>& edge_sets,
                          const std::vector<int>& targets) {
  std::set<int> verts;
  for (const auto& set : edge_sets)
    for (const auto& [u, v] : set) {
      verts.insert(u);
      verts.insert(v);
    }
  verts.insert(targets.begin(), targets.end());
  LocalIndex idx;
  for (int g : verts) {
    idx.to_local[g] = static_cast<int>(idx.globals.size());
    idx.globals.push_back(g);
  }
  return idx;
}

void fill_edges_and_demand(const std::vector<std::vector<VertexPair>>& edge_sets,
                           const LocalIndex& idx, ReallocationProblem& p) {
  p.r = static_cast<int>(edge_sets.size());
  p.touched = static_cast<int>(idx.globals.size());
  p.demand.assign(p.touched, std::vector<int>(p.r, 0));
  for (int k = 0; k < p.r; ++k) {
    std::vector<VertexPair> sorted = edge_sets[k];
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [gu, gv] : sorted) {
      int u = idx.local(gu), v = idx.local(gv);
      p.edges.push_back(normalized(u, v));
      ++p.demand[u][k];
      ++p.demand[v][k];
    }
  }
}

// Base labels and keep-groups for the abstract (pattern) model of one factor.
void abstract_factor_context(const std::vector<VertexPair>& set,
                             const std::vector<VertexPair>& joins, const LocalIndex& idx,
                             ReallocationProblem& p, int k) {
  int t = p.touched;
  auto& labels = p.base_label[k];
  labels.assign(t, -1);
  int next = 0;
  // Every vertex of E_k gets a label; endpoints matched by a join share one.
  TinyUF pre(t);
  std::vector<char> in_set(t, 0);
  for (const auto& [gu, gv] : set) {
    in_set[idx.local(gu)] = 1;
    in_set[idx.local(gv)] = 1;
  }
  for (const auto& [gu, gv] : joins) pre.unite(idx.local(gu), idx.local(gv));
  std::vector<int> rep_label(t, -1);
  for (int v = 0; v < t; ++v) {
    if (!in_set[v]) continue;
    int root = pre.find(v);
    if (rep_label[root] < 0) rep_label[root] = next++;
    labels[v] = rep_label[root];
  }
  p.label_count[k] = next;

  // Original components: cycles formed by E_k paths plus the joins.
  TinyUF orig(t);
  for (const auto& [gu, gv] : set) orig.unite(idx.local(gu), idx.local(gv));
  for (const auto& [gu, gv] : joins) orig.unite(idx.local(gu), idx.local(gv));
  std::map<int, std::set<int>> groups;
  for (int v = 0; v < t; ++v)
    if (in_set[v]) groups[orig.find(v)].insert(labels[v]);
  for (auto& [root, lbls] : groups)
    if (lbls.size() > 1) p.keep_groups[k].emplace_back(lbls.begin(), lbls.end());
}

std::vector<std::vector<VertexPair>> endpoint_matchings(std::vector<int> endpoints) {
  std::vector<std::vector<VertexPair>> out;
  std::vector<VertexPair> current;
  std::function<void()> rec = [&]() {
    if (endpoints.empty()) {
      out.push_back(current);
      return;
    }
    int first = endpoints[0];
    for (size_t j = 1; j < endpoints.size(); ++j) {
      std::vector<int> rest;
      int partner = endpoints[j];
      for (size_t i = 1; i < endpoints.size(); ++i)
        if (i != j) rest.push_back(endpoints[i]);
      current.emplace_back(first, partner);
      std::swap(endpoints, rest);
      rec();
      std::swap(endpoints, rest);
      current.pop_back();
    }
  };
  rec();
  return out;
}

std::vector<int> path_endpoints(const std::vector<VertexPair>& set) {
  std::map<int, int> deg;
  for (const auto& [u, v] : set) {
    ++deg[u];
    ++deg[v];
  }
  std::vector<int> ends;
  for (const auto& [v, d] : deg) {
    if (d > 2)
      throw ValidationError("edge set is not a disjoint union of paths (degree > 2)");
    if (d == 1) ends.push_back(v);
  }
  // A component with no degree-1 vertex is a cycle.
  if (!set.empty()) {
    auto comps = edge_induced_components(set);
    std::set<int> end_set(ends.begin(), ends.end());
    for (const auto& comp : comps) {
      bool has_end = false;
      for (int v : comp) has_end |= end_set.count(v) > 0;
      if (!has_end) throw ValidationError("edge set contains a cycle");
    }
  }
  return ends;
}

}  // namespace

FactorState FactorState::build(int vertex_count, std::vector<std::vector<VertexPair>> factors) {
  FactorState s;
  s.vertex_count_ = vertex_count;
  s.neighbors_.resize(factors.size());
  s.components_.resize(factors.size());
  std::set<VertexPair> all_edges;
  for (size_t k = 0; k < factors.size(); ++k) {
    auto& nb = s.neighbors_[k];
    nb.assign(vertex_count, {-1, -1});
    for (const auto& e : factors[k]) {
      auto [u, v] = normalized(e);
      if (u < 0 || v >= vertex_count || u == v)
        throw ValidationError("factor edge out of range or loop");
      if (!all_edges.insert({u, v}).second)
        throw ValidationError("factors are not pairwise edge-disjoint");
      for (int end : {u, v}) {
        int other = end == u ? v : u;
        if (nb[end][0] < 0)
          nb[end][0] = other;
        else if (nb[end][1] < 0)
          nb[end][1] = other;
        else
          throw ValidationError("factor " + std::to_string(k) + " is not 2-regular at vertex " +
                                std::to_string(end));
      }
    }
    for (int v = 0; v < vertex_count; ++v)
      if (nb[v][1] < 0)
        throw ValidationError("factor " + std::to_string(k) +
                              " is not spanning 2-regular at vertex " + std::to_string(v));
    s.refresh_components(static_cast<int>(k));
  }
  return s;
}

void FactorState::refresh_components(int k) {
  auto& label = components_[k];
  label.assign(vertex_count_, -1);
  int next = 0;
  for (int start = 0; start < vertex_count_; ++start) {
    if (label[start] >= 0) continue;
    label[start] = next;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : neighbors_[k][v])
        if (w >= 0 && label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
}

bool FactorState::has_edge(int k, int u, int v) const {
  if (u < 0 || u >= vertex_count_) return false;
  return neighbors_[k][u][0] == v || neighbors_[k][u][1] == v;
}

std::vector<VertexPair> FactorState::factor_edges(int k) const {
  std::vector<VertexPair> out;
  out.reserve(vertex_count_);
  for (int v = 0; v < vertex_count_; ++v)
    for (int w : neighbors_[k][v])
      if (w > v) out.emplace_back(v, w);
  std::sort(out.begin(), out.end());
  return out;
}

int FactorState::component_count(int k) const {
  return linehamd::component_count(components_[k]);
}

bool FactorState::all_connected() const {
  for (int k = 0; k < factor_count(); ++k)
    if (!connected(k)) return false;
  return true;
}

std::vector<int> FactorState::cycle_of(int k) const {
  if (!connected(k)) throw ValidationError("factor is not a single cycle");
  std::vector<int> cycle;
  cycle.reserve(vertex_count_);
  int start = 0;
  int prev = -1, cur = start;
  do {
    cycle.push_back(cur);
    const auto& nb = neighbors_[k][cur];
    int next = (nb[0] != prev) ? nb[0] : nb[1];
    if (cycle.size() == 1) next = std::min(nb[0], nb[1]);
    prev = cur;
    cur = next;
  } while (cur != start);
  return cycle;
}

FactorState apply_connector(const FactorState& state, const ConnectorInstance& c) {
  int r = state.factor_count();
  if (static_cast<int>(c.edge_sets.size()) != r)
    throw ValidationError("connector instance must supply one edge set per factor");
  for (int k = 0; k < r; ++k)
    for (const auto& [u, v] : c.edge_sets[k])
      if (!state.has_edge(k, u, v))
        throw ValidationError("connector edge not present in its factor");

  LocalIndex idx = index_vertices(c.edge_sets, c.targets);
  ReallocationProblem p;
  fill_edges_and_demand(c.edge_sets, idx, p);
  p.base_label.resize(r);
  p.label_count.assign(r, 0);
  p.keep_groups.resize(r);
  p.target_labels.resize(r);

  int t = p.touched;
  for (int k = 0; k < r; ++k) {
    // Component labels of F_k - E_k over the whole ambient set, then restricted
    // to the touched vertices and renumbered densely.
    std::set<VertexPair> removed;
    for (const auto& e : c.edge_sets[k]) removed.insert(normalized(e));
    std::vector<VertexPair> rest;
    rest.reserve(state.vertex_count());
    for (int v = 0; v < state.vertex_count(); ++v)
      for (int w : state.adjacency(k)[v])
        if (w > v && !removed.count({v, w})) rest.emplace_back(v, w);
    std::vector<int> c1 = component_labels(state.vertex_count(), rest);

    auto& labels = p.base_label[k];
    labels.assign(t, -1);
    std::map<int, int> dense;
    for (int lv = 0; lv < t; ++lv) {
      int g = idx.globals[lv];
      auto it = dense.emplace(c1[g], static_cast<int>(dense.size())).first;
      labels[lv] = it->second;
    }
    p.label_count[k] = static_cast<int>(dense.size());

    // Original components that split must be re-merged. A piece created by
    // deleting E_k edges always ends at a touched vertex, so every piece of a
    // split component is visible through some touched vertex's label.
    const std::vector<int>& c0 = state.components(k);
    std::map<int, std::set<int>> groups;
    for (int v = 0; v < state.vertex_count(); ++v) {
      auto it = dense.find(c1[v]);
      if (it != dense.end()) groups[c0[v]].insert(it->second);
    }
    for (auto& [root, lbls] : groups)
      if (lbls.size() > 1) p.keep_groups[k].emplace_back(lbls.begin(), lbls.end());

    for (int target : c.targets) p.target_labels[k].push_back(dense.at(c1[target]));
  }

  auto assignment = solve_reallocation(p);
  if (!assignment) throw NoValidReallocation("no valid reallocation for connector instance");

  // Materialize F'_k = (F_k - E_k) + E'_k.
  std::vector<std::vector<VertexPair>> new_factors(r);
  for (int k = 0; k < r; ++k) {
    std::set<VertexPair> removed;
    for (const auto& e : c.edge_sets[k]) removed.insert(normalized(e));
    for (const auto& e : state.factor_edges(k))
      if (!removed.count(e)) new_factors[k].push_back(e);
  }
  size_t edge_idx = 0;
  for (int k = 0; k < r; ++k) {
    std::vector<VertexPair> sorted = c.edge_sets[k];
    std::sort(sorted.begin(), sorted.end());
    for (const auto& e : sorted) {
      (void)e;
      int target_factor = (*assignment)[edge_idx];
      int gu = idx.globals[p.edges[edge_idx].first];
      int gv = idx.globals[p.edges[edge_idx].second];
      new_factors[target_factor].push_back(normalized(gu, gv));
      ++edge_idx;
    }
  }
  return FactorState::build(state.vertex_count(), std::move(new_factors));
}

FactorState many_repairs(FactorState state, const RepairSchedule& schedule) {
  for (const auto& entry : schedule.entries) {
    ConnectorInstance inst;
    inst.targets = entry.targets;
    inst.edge_sets.assign(state.factor_count(), {});
    for (const auto& [u, v] : entry.subgraph_edges) {
      int owner = -1;
      for (int k = 0; k < state.factor_count(); ++k)
        if (state.has_edge(k, u, v)) {
          owner = k;
          break;
        }
      if (owner < 0) throw InternalError("schedule subgraph edge missing from every factor");
      inst.edge_sets[owner].push_back(normalized(u, v));
    }
    state = apply_connector(state, inst);
  }
  if (!state.all_connected())
    throw InternalError("repair schedule finished with a disconnected factor");
  return state;
}

std::vector<LinkagePattern> enumerate_linkage_patterns(
    const std::vector<std::vector<VertexPair>>& edge_sets) {
  std::vector<std::vector<std::vector<VertexPair>>> per_factor;
  for (const auto& set : edge_sets)
    per_factor.push_back(endpoint_matchings(path_endpoints(set)));
  std::vector<LinkagePattern> out;
  std::vector<size_t> pick(per_factor.size(), 0);
  while (true) {
    LinkagePattern pat;
    for (size_t k = 0; k < per_factor.size(); ++k) pat.joins.push_back(per_factor[k][pick[k]]);
    out.push_back(std::move(pat));
    size_t k = 0;
    while (k < pick.size() && ++pick[k] == per_factor[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  return out;
}

namespace {

ReallocationProblem abstract_problem(const std::vector<std::vector<VertexPair>>& edge_sets,
                                     const LinkagePattern& pattern,
                                     const std::vector<int>& targets, const LocalIndex& idx) {
  ReallocationProblem p;
  fill_edges_and_demand(edge_sets, idx, p);
  int r = p.r;
  p.base_label.resize(r);
  p.label_count.assign(r, 0);
  p.keep_groups.resize(r);
  p.target_labels.resize(r);
  for (int k = 0; k < r; ++k) {
    abstract_factor_context(edge_sets[k], pattern.joins[k], idx, p, k);
    for (int target : targets) {
      int lbl = p.base_label[k][idx.local(target)];
      if (lbl < 0)
        throw ValidationError(
            "connector target is not covered by every factor's edge set; the linkage-pattern "
            "model cannot represent it");
      p.target_labels[k].push_back(lbl);
    }
  }
  return p;
}

}  // namespace

ConnectorReport validate_connector(const std::vector<std::vector<VertexPair>>& edge_sets,
                                   const std::vector<int>& targets) {
  ConnectorReport report;
  LocalIndex idx = index_vertices(edge_sets, targets);
  for (const LinkagePattern& pattern : enumerate_linkage_patterns(edge_sets)) {
    ++report.patterns_checked;
    ReallocationProblem p = abstract_problem(edge_sets, pattern, targets, idx);
    if (!solve_reallocation(p)) {
      report.all_ok = false;
      report.failures.push_back(pattern);
    }
  }
  return report;
}

bool check_reallocation(const std::vector<std::vector<VertexPair>>& edge_sets,
                        const LinkagePattern& pattern, const std::vector<int>& targets,
                        const std::vector<VertexPair>& edges, const std::vector<int>& assignment) {
  LocalIndex idx = index_vertices(edge_sets, targets);
  ReallocationProblem p = abstract_problem(edge_sets, pattern, targets, idx);
  // Map the caller's edge list onto the problem's fixed edge order.
  if (edges.size() != p.edges.size()) return false;
  std::vector<int> mapped(p.edges.size(), -1);
  std::vector<char> used(edges.size(), 0);
  for (size_t i = 0; i < p.edges.size(); ++i) {
    VertexPair want{idx.globals[p.edges[i].first], idx.globals[p.edges[i].second]};
    bool found = false;
    for (size_t j = 0; j < edges.size(); ++j) {
      if (used[j] || normalized(edges[j]) != normalized(want)) continue;
      used[j] = 1;
      mapped[i] = assignment[j];
      found = true;
      break;
    }
    if (!found) return false;
  }
  // Degree conservation.
  std::vector<std::vector<int>> demand = p.demand;
  for (size_t i = 0; i < p.edges.size(); ++i) {
    auto [u, v] = p.edges[i];
    int k = mapped[i];
    if (k < 0 || k >= p.r) return false;
    if (--demand[u][k] < 0 || --demand[v][k] < 0) return false;
  }
  return assignment_valid(p, mapped);
}

}  // namespace linehamd
