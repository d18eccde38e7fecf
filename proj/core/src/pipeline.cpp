#include "linehamd/pipeline.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "linehamd/fragments.hpp"
#include "linehamd/labels.hpp"

namespace linehamd {

Decomposition decompose_line_graph(const Graph& g, const DecomposeOptions& options) {
  if (g.vertex_count() < 3) throw ValidationError("graph too small to decompose");
  if (!g.is_regular()) throw ValidationError("graph is not regular");
  int deg = g.degree(0);
  if (deg < 2) throw ValidationError("degree must be at least 2");

  std::vector<int> ham = options.ham;
  std::vector<VertexPair> matching = options.matching;
  if (deg % 2 == 0) {
    if (!matching.empty()) throw ValidationError("even degree takes no matching");
    if (ham.empty()) {
      HamiltonResult res = find_hamilton_cycle(g, options.node_budget);
      if (res.status == SearchStatus::budget_exceeded)
        throw PreconditionError("hamilton search exceeded its budget");
      if (res.status == SearchStatus::none)
        throw PreconditionError("graph has no Hamilton cycle");
      ham = res.cycle;
    }
  } else {
    if (ham.empty() != matching.empty())
      throw ValidationError("odd degree requires supplying both the cycle and matching or neither");
    if (ham.empty()) {
      ThreeFactorResult res = find_hamiltonian_3factor(g, options.node_budget);
      if (res.status == SearchStatus::budget_exceeded)
        throw PreconditionError("3-factor search exceeded its budget");
      if (res.status == SearchStatus::none)
        throw PreconditionError("graph has no Hamiltonian 3-factor");
      ham = res.cycle;
      matching = res.matching;
    }
  }

  DirectedTwoFactorisation dft = build_directed_2_factorisation(g, ham, matching);
  LabelMap labels = LabelMap::build(g, dft);
  Catalog catalog = make_catalog(dft.n(), dft.odd_mode());

  Decomposition out;
  for (const auto& plan : catalog.plans) {
    auto cycles = realize_fragment(g, labels, dft, plan);
    for (auto& cycle : cycles) out.cycles.push_back(std::move(cycle));
  }
  int expected = deg - 1;
  if (static_cast<int>(out.cycles.size()) != expected)
    throw InternalError("pipeline produced the wrong number of cycles");
  return out;
}

VerificationReport verify_decomposition(const LineGraph& l, const Decomposition& d) {
  VerificationReport r;
  int n = l.vertex_count();
  r.regularity = true;
  r.connectivity = true;
  r.cycle_length = true;
  for (const auto& cycle : d.cycles) {
    if (static_cast<int>(cycle.size()) != n) r.cycle_length = false;
    std::vector<char> seen(n, 0);
    bool distinct = true, adjacent = true;
    for (size_t i = 0; i < cycle.size(); ++i) {
      int v = cycle[i];
      if (v < 0 || v >= n || seen[v]) {
        distinct = false;
        break;
      }
      seen[v] = 1;
      if (!l.adjacent(v, cycle[(i + 1) % cycle.size()])) adjacent = false;
    }
    if (!distinct || !adjacent || cycle.size() < 3) r.regularity = false;
    bool spans = distinct;
    for (int v = 0; v < n && spans; ++v) spans = seen[v];
    if (!spans) r.connectivity = false;
  }
  std::set<VertexPair> used;
  bool disjoint = true;
  long long total = 0;
  for (const auto& cycle : d.cycles)
    for (size_t i = 0; i < cycle.size(); ++i) {
      VertexPair e = normalized(cycle[i], cycle[(i + 1) % cycle.size()]);
      ++total;
      if (!used.insert(e).second) disjoint = false;
    }
  r.partition = disjoint && total == l.edge_count();
  // deg(L)/2 cycles; line graphs of regular graphs are regular.
  if (n > 0 && !d.cycles.empty()) {
    int deg = static_cast<int>(l.neighbors(0).size());
    r.cycle_count = static_cast<int>(d.cycles.size()) * 2 == deg;
  } else {
    r.cycle_count = n == 0 && d.cycles.empty();
  }
  r.pass = r.regularity && r.connectivity && r.partition && r.cycle_count && r.cycle_length;
  if (!r.pass) {
    r.detail = std::string() + (r.regularity ? "" : "[cycles invalid]") +
               (r.connectivity ? "" : "[not spanning]") + (r.partition ? "" : "[not a partition]") +
               (r.cycle_count ? "" : "[cycle count]") + (r.cycle_length ? "" : "[cycle length]");
  }
  return r;
}

namespace {

// Enumerates Hamilton cycles of the graph induced by `alive` edges that
// contain the forced edge; visit gets the cycle's edge list.
struct PackingSearch {
  const Graph& g;
  long long budget;
  long long nodes = 0;
  bool out_of_budget = false;
  std::vector<char> edge_used;  // consumed by earlier cycles
  std::vector<int> degree_left;
  std::vector<std::vector<int>> cycles;

  explicit PackingSearch(const Graph& graph, long long node_budget)
      : g(graph), budget(node_budget), edge_used(graph.edge_count(), 0),
        degree_left(graph.vertex_count(), 0) {
    for (int v = 0; v < g.vertex_count(); ++v) degree_left[v] = g.degree(v);
  }

  bool all_used() const {
    for (char u : edge_used)
      if (!u) return false;
    return true;
  }

  // Decompose the remaining graph; every vertex still has even remaining
  // degree. Returns true when a full packing was found.
  bool pack() {
    if (++nodes > budget) {
      out_of_budget = true;
      return false;
    }
    if (all_used()) return true;
    // The next cycle must use the lowest unused edge at the lowest busy vertex.
    int anchor = -1, forced_edge = -1;
    for (int v = 0; v < g.vertex_count() && anchor < 0; ++v)
      if (degree_left[v] > 0) {
        anchor = v;
        for (const auto& [w, e] : g.adjacency(v))
          if (!edge_used[e] && (forced_edge < 0 || e < forced_edge)) forced_edge = e;
      }
    if (anchor < 0) return false;
    int start = anchor;
    int next = g.other_end(forced_edge, anchor);
    std::vector<int> path{start, next};
    std::vector<char> visited(g.vertex_count(), 0);
    visited[start] = visited[next] = 1;
    edge_used[forced_edge] = 1;
    degree_left[start]--;
    degree_left[next]--;
    bool ok = extend_cycle(path, visited);
    edge_used[forced_edge] = 0;
    degree_left[start]++;
    degree_left[next]++;
    return ok;
  }

  bool extend_cycle(std::vector<int>& path, std::vector<char>& visited) {
    if (++nodes > budget) {
      out_of_budget = true;
      return false;
    }
    int v = path.back();
    if (static_cast<int>(path.size()) == g.vertex_count()) {
      int e = g.edge_between(v, path[0]);
      if (e < 0 || edge_used[e]) return false;
      edge_used[e] = 1;
      degree_left[v]--;
      degree_left[path[0]]--;
      cycles.push_back(path);
      if (pack()) return true;
      cycles.pop_back();
      edge_used[e] = 0;
      degree_left[v]++;
      degree_left[path[0]]++;
      return false;
    }
    for (const auto& [w, e] : g.adjacency(v)) {
      if (edge_used[e] || visited[w]) continue;
      visited[w] = 1;
      path.push_back(w);
      edge_used[e] = 1;
      degree_left[v]--;
      degree_left[w]--;
      if (extend_cycle(path, visited)) return true;
      degree_left[v]++;
      degree_left[w]++;
      edge_used[e] = 0;
      path.pop_back();
      visited[w] = 0;
      if (out_of_budget) return false;
    }
    return false;
  }
};

}  // namespace

OracleResult brute_force_hamilton_decomposition(const Graph& h, long long node_budget) {
  OracleResult result;
  if (h.vertex_count() == 0 || !h.is_regular() || h.degree(0) % 2 != 0 || h.degree(0) < 2) {
    result.status = SearchStatus::none;
    return result;
  }
  PackingSearch search(h, node_budget);
  if (search.pack()) {
    result.status = SearchStatus::found;
    result.decomposition.cycles = search.cycles;
    return result;
  }
  result.status = search.out_of_budget ? SearchStatus::budget_exceeded : SearchStatus::none;
  return result;
}

CrossCheckReport cross_check(const Graph& g, long long oracle_budget) {
  CrossCheckReport report;
  LineGraph l(g);
  Decomposition d;
  try {
    d = decompose_line_graph(g);
    report.pipeline_ok = true;
  } catch (const PreconditionError&) {
    report.pipeline_ok = false;
  }
  if (report.pipeline_ok) report.verified = verify_decomposition(l, d).pass;
  OracleResult oracle = brute_force_hamilton_decomposition(l.as_graph(), oracle_budget);
  report.oracle_status = oracle.status;
  if (oracle.status == SearchStatus::budget_exceeded)
    report.agree = true;  // oracle inconclusive
  else
    report.agree = !report.pipeline_ok || oracle.status == SearchStatus::found;
  return report;
}

Graph complete_graph(int vertices) {
  std::vector<VertexPair> edges;
  for (int u = 0; u < vertices; ++u)
    for (int v = u + 1; v < vertices; ++v) edges.emplace_back(u, v);
  return Graph::build(vertices, edges);
}

Graph circulant_graph(int vertices, const std::vector<int>& offsets) {
  std::set<VertexPair> edges;
  for (int v = 0; v < vertices; ++v)
    for (int d : offsets) {
      if (d <= 0 || 2 * d == vertices || d >= vertices)
        throw ValidationError("circulant offsets must satisfy 0 < d < n/2");
      edges.insert(normalized(v, (v + d) % vertices));
    }
  return Graph::build(vertices, std::vector<VertexPair>(edges.begin(), edges.end()));
}

PlantedGraph random_regular_hamiltonian(int vertices, int degree, std::uint64_t seed) {
  if (degree < 2 || degree >= vertices)
    throw ValidationError("degree out of range");
  if (vertices * degree % 2 != 0)
    throw ValidationError("odd degree needs an even vertex count");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::set<VertexPair> used;
    std::vector<int> order(vertices);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> ham = order;
    bool ok = true;
    for (int i = 0; i < vertices && ok; ++i)
      ok = used.insert(normalized(ham[i], ham[(i + 1) % vertices])).second;
    if (!ok) continue;
    // Extra 2-factors are planted as further Hamilton cycles on fresh edges.
    int extra_cycles = degree / 2 - 1;
    for (int k = 0; k < extra_cycles && ok; ++k) {
      bool placed = false;
      for (int tries = 0; tries < 200 && !placed; ++tries) {
        std::shuffle(order.begin(), order.end(), rng);
        std::set<VertexPair> add;
        bool fresh = true;
        for (int i = 0; i < vertices && fresh; ++i) {
          VertexPair e = normalized(order[i], order[(i + 1) % vertices]);
          fresh = !used.count(e) && add.insert(e).second;
        }
        if (fresh) {
          used.insert(add.begin(), add.end());
          placed = true;
        }
      }
      ok = placed;
    }
    std::vector<VertexPair> matching;
    if (ok && degree % 2 == 1) {
      // Random perfect matching on fresh edges via randomized backtracking.
      std::vector<int> mate(vertices, -1);
      std::function<bool(void)> match = [&]() {
        int u = -1;
        for (int v = 0; v < vertices; ++v)
          if (mate[v] < 0) {
            u = v;
            break;
          }
        if (u < 0) return true;
        std::vector<int> cands;
        for (int w = 0; w < vertices; ++w)
          if (w != u && mate[w] < 0 && !used.count(normalized(u, w))) cands.push_back(w);
        std::shuffle(cands.begin(), cands.end(), rng);
        for (int w : cands) {
          mate[u] = w;
          mate[w] = u;
          if (match()) return true;
          mate[u] = -1;
          mate[w] = -1;
        }
        return false;
      };
      ok = match();
      if (ok)
        for (int v = 0; v < vertices; ++v)
          if (v < mate[v]) {
            matching.push_back({v, mate[v]});
            used.insert(normalized(v, mate[v]));
          }
    }
    if (!ok) continue;
    Graph g = Graph::build(vertices, std::vector<VertexPair>(used.begin(), used.end()));
    if (!g.is_regular() || g.degree(0) != degree) continue;
    PlantedGraph out{std::move(g), std::move(ham), std::move(matching)};
    return out;
  }
  throw InternalError("random regular generator failed to converge");
}

}  // namespace linehamd
