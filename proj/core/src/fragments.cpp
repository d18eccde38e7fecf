#include "linehamd/fragments.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace linehamd {

namespace {

std::vector<VertexPair> factor_edge_list(const Graph& g, const DirectedTwoFactorisation& dft,
                                         int factor_id) {
  if (factor_id == kMatchingFactor) return dft.matching_pairs(g);
  return dft.factors[factor_id].undirected_edges();
}

std::vector<char> compute_partition(const Graph& g, const DirectedTwoFactorisation& dft,
                                    const std::vector<int>& factor_ids) {
  std::vector<std::vector<VertexPair>> factors;
  factors.reserve(factor_ids.size());
  for (int id : factor_ids) factors.push_back(factor_edge_list(g, dft, id));
  return linking_partition(g.vertex_count(), factors).in_u;
}

// Even n=2 rule: U takes the lowest vertex of each F_0 cycle, U' its successor.
std::vector<int> arc_pair_classes(const Graph& g, const DirectedTwoFactorisation& dft,
                                  int factor_id) {
  const OrientedTwoFactor& f = dft.factors[factor_id];
  std::vector<int> cls(g.vertex_count(), 0);  // 0 = rest, 1 = U, 2 = U'
  std::vector<char> seen(g.vertex_count(), 0);
  for (int start = 0; start < g.vertex_count(); ++start) {
    if (seen[start]) continue;
    int v = start;
    do {
      seen[v] = 1;
      v = f.successor[v];
    } while (v != start);
    cls[start] = 1;
    cls[f.successor[start]] = 2;
  }
  return cls;
}

FragmentGraph unite_all(const std::vector<const FragmentGraph*>& parts) {
  FragmentGraph out = *parts.front();
  for (size_t i = 1; i < parts.size(); ++i) out = out.unite(*parts[i]);
  return out;
}

struct Layout {
  // classifier: per vertex, class index
  std::vector<int> vertex_class;
  // pieces[class][factor]
  std::vector<std::vector<FragmentGraph>> pieces;
  // extra connector targets per class (encoded labels)
  std::vector<std::vector<int>> extra_targets;
};

AssembledFragment assemble_layout(const Graph& g, const LabelMap& labels,
                                  const DirectedTwoFactorisation& dft, const Layout& layout) {
  int r = static_cast<int>(layout.pieces[0].size());
  int line_vertices = g.edge_count();
  std::vector<std::vector<VertexPair>> factors(r);
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& per_factor = layout.pieces[layout.vertex_class[v]];
    for (int j = 0; j < r; ++j) {
      auto img = sigma_edges(labels, v, per_factor[j]);
      factors[j].insert(factors[j].end(), img.begin(), img.end());
    }
  }
  AssembledFragment out{FactorState::build(line_vertices, std::move(factors)), {}};

  // Schedule along F_inf starting at vertex 0.
  int n = labels.n();
  const OrientedTwoFactor& f_inf = dft.f_inf();
  int v = 0;
  do {
    int cls = layout.vertex_class[v];
    FragmentGraph covered = layout.pieces[cls][0];
    for (int j = 1; j < r; ++j) covered = covered.unite(layout.pieces[cls][j]);
    RepairSchedule::Entry entry;
    entry.subgraph_edges = sigma_edges(labels, v, covered);
    entry.targets = {labels.a(v, inf_index(n)), labels.b(v, inf_index(n))};
    for (int code : layout.extra_targets[cls])
      entry.targets.push_back(labels.line_vertex(v, decode_label(code, n)));
    out.schedule.entries.push_back(std::move(entry));
    v = f_inf.successor[v];
  } while (v != 0);
  return out;
}

void assert_linking(const AssembledFragment& assembled) {
  std::set<int> linking;
  for (const auto& entry : assembled.schedule.entries)
    linking.insert(entry.targets.begin(), entry.targets.end());
  for (int k = 0; k < assembled.state.factor_count(); ++k) {
    const auto& comp = assembled.state.components(k);
    int comps = assembled.state.component_count(k);
    std::vector<char> hit(comps, 0);
    for (int target : linking) hit[comp[target]] = 1;
    for (int c = 0; c < comps; ++c)
      if (!hit[c])
        throw InternalError("assembled factor " + std::to_string(k) +
                            " has a component missed by the repair targets");
  }
}

std::vector<char> even_multi_partition(const Graph& g, const DirectedTwoFactorisation& dft, int s,
                                       int t) {
  return compute_partition(g, dft, {s, t, inf_index(dft.n())});
}

Layout two_class_layout(const std::vector<char>& in_u, std::vector<FragmentGraph> u_pieces,
                        std::vector<FragmentGraph> up_pieces) {
  Layout l;
  l.vertex_class.resize(in_u.size());
  for (size_t v = 0; v < in_u.size(); ++v) l.vertex_class[v] = in_u[v] ? 0 : 1;
  l.pieces = {std::move(u_pieces), std::move(up_pieces)};
  l.extra_targets = {{}, {}};
  return l;
}

struct OddBigHalfSpec {
  const OddCCRecipe* sub;
  const FragmentGraph* u_extra_piece;   // X or X'
  const FragmentGraph* up_extra_piece;  // X' or X
  const FragmentGraph* path;            // P_1 or P_2
  int u_label;
  bool extra_on_u;  // whether the u-target applies to U (else U')
};

AssembledFragment assemble_odd_big_half(const Graph& g, const LabelMap& labels,
                                        const DirectedTwoFactorisation& dft,
                                        const OddBigRecipe& big, const OddBigHalfSpec& spec) {
  std::vector<char> in_u = compute_partition(g, dft, {kMatchingFactor, big.t});
  std::vector<char> in_w = compute_partition(g, dft, {kMatchingFactor, spec.sub->t});
  const OddCCRecipe& h = *spec.sub;
  FragmentGraph j1_w = h.s.unite(h.r).unite(h.c);
  FragmentGraph j1_wp = h.t_piece.unite(h.r).unite(h.cp);
  FragmentGraph j2_w = h.sp.unite(h.rp).unite(h.cp);
  FragmentGraph j2_wp = h.tp.unite(h.rp).unite(h.c);
  FragmentGraph j3_u = spec.u_extra_piece->unite(*spec.path);
  FragmentGraph j3_up = spec.up_extra_piece->unite(*spec.path);

  Layout l;
  l.vertex_class.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    l.vertex_class[v] = (in_u[v] ? 0 : 1) + (in_w[v] ? 0 : 2);
  l.pieces.resize(4);
  l.extra_targets.resize(4);
  for (int cls = 0; cls < 4; ++cls) {
    bool u_side = (cls & 1) == 0;
    bool w_side = (cls & 2) == 0;
    l.pieces[cls] = {w_side ? j1_w : j1_wp, w_side ? j2_w : j2_wp, u_side ? j3_u : j3_up};
    if (u_side == spec.extra_on_u) l.extra_targets[cls] = {spec.u_label};
  }
  return assemble_layout(g, labels, dft, l);
}

}  // namespace

int FragmentPlan::factor_count() const {
  struct Visitor {
    int operator()(const EvenMultiRecipe& r) const { return static_cast<int>(r.x.size()); }
    int operator()(const EvenSwapRecipe&) const { return 3; }
    int operator()(const EvenEasyRecipe&) const { return 2; }
    int operator()(const EvenCCRecipe&) const { return 2; }
    int operator()(const OddCCRecipe&) const { return 2; }
    int operator()(const OddBigRecipe&) const { return 6; }
    int operator()(const FourDecompRecipe&) const { return 2; }
    int operator()(const DirectRecipe& r) const { return static_cast<int>(r.pieces[0].size()); }
  };
  return std::visit(Visitor{}, recipe);
}

std::vector<AssembledFragment> assemble_j_factors(const Graph& g, const LabelMap& labels,
                                                  const DirectedTwoFactorisation& dft,
                                                  const FragmentPlan& plan) {
  std::vector<AssembledFragment> out;
  int n = labels.n();

  if (const auto* r = std::get_if<EvenMultiRecipe>(&plan.recipe)) {
    std::vector<char> in_u = even_multi_partition(g, dft, r->s, r->t);
    std::vector<FragmentGraph> u = r->x;
    std::vector<FragmentGraph> up = r->x;
    std::swap(up[0], up[1]);
    out.push_back(assemble_layout(g, labels, dft, two_class_layout(in_u, u, up)));
  } else if (const auto* r = std::get_if<EvenSwapRecipe>(&plan.recipe)) {
    std::vector<char> in_u = even_multi_partition(g, dft, r->s, r->t);
    out.push_back(assemble_layout(
        g, labels, dft,
        two_class_layout(in_u, {r->x1, r->x2, r->x3}, {r->x2p, r->x1p, r->x3})));
  } else if (const auto* r = std::get_if<EvenEasyRecipe>(&plan.recipe)) {
    Layout l;
    l.vertex_class.assign(g.vertex_count(), 0);
    l.pieces = {{r->s.unite(r->r), r->sp.unite(r->rp)}};
    l.extra_targets = {{}};
    out.push_back(assemble_layout(g, labels, dft, l));
  } else if (const auto* r = std::get_if<EvenCCRecipe>(&plan.recipe)) {
    std::vector<char> in_u = compute_partition(g, dft, r->t_set);
    FragmentGraph sr = r->s.unite(r->r);
    FragmentGraph sprp = r->sp.unite(r->rp);
    out.push_back(assemble_layout(
        g, labels, dft,
        two_class_layout(in_u, {sr.unite(r->c), sprp.unite(r->cp)},
                         {sr.unite(r->cp), sprp.unite(r->c)})));
  } else if (const auto* r = std::get_if<OddCCRecipe>(&plan.recipe)) {
    std::vector<char> in_u = compute_partition(g, dft, {kMatchingFactor, r->t});
    out.push_back(assemble_layout(
        g, labels, dft,
        two_class_layout(in_u, {r->s.unite(r->r).unite(r->c), r->sp.unite(r->rp).unite(r->cp)},
                         {r->t_piece.unite(r->r).unite(r->cp), r->tp.unite(r->rp).unite(r->c)})));
  } else if (const auto* r = std::get_if<FourDecompRecipe>(&plan.recipe)) {
    std::vector<char> in_u = compute_partition(g, dft, {kMatchingFactor, r->t});
    out.push_back(assemble_layout(g, labels, dft,
                                  two_class_layout(in_u, {r->x1, r->y1}, {r->x1p, r->y1p})));
  } else if (const auto* r = std::get_if<OddBigRecipe>(&plan.recipe)) {
    OddBigHalfSpec half1{&r->h1, &r->x, &r->xp, &r->p1, r->u1_label, true};
    OddBigHalfSpec half2{&r->h2, &r->xp, &r->x, &r->p2, r->u2_label, false};
    out.push_back(assemble_odd_big_half(g, labels, dft, *r, half1));
    out.push_back(assemble_odd_big_half(g, labels, dft, *r, half2));
  } else if (const auto* r = std::get_if<DirectRecipe>(&plan.recipe)) {
    Layout l;
    l.pieces = r->pieces;
    l.extra_targets.assign(r->pieces.size(), {});
    if (r->arc_pair_mode) {
      l.vertex_class = arc_pair_classes(g, dft, r->arc_pair_factor);
    } else if (r->partition_links.empty()) {
      l.vertex_class.assign(g.vertex_count(), 0);
    } else if (r->partition_links.size() == 1) {
      std::vector<char> in_u = compute_partition(g, dft, r->partition_links[0]);
      l.vertex_class.resize(g.vertex_count());
      for (int v = 0; v < g.vertex_count(); ++v) l.vertex_class[v] = in_u[v] ? 0 : 1;
    } else if (r->partition_links.size() == 2) {
      std::vector<char> in_u = compute_partition(g, dft, r->partition_links[0]);
      std::vector<char> in_v = compute_partition(g, dft, r->partition_links[1]);
      l.vertex_class.resize(g.vertex_count());
      for (int v = 0; v < g.vertex_count(); ++v)
        l.vertex_class[v] = (in_u[v] ? 0 : 1) + (in_v[v] ? 0 : 2);
    } else {
      throw ValidationError("direct recipe supports at most two partitions");
    }
    out.push_back(assemble_layout(g, labels, dft, l));
  } else {
    throw InternalError("unhandled recipe kind");
  }

  (void)n;
  for (const auto& assembled : out) assert_linking(assembled);
  return out;
}

std::vector<std::vector<int>> realize_fragment(const Graph& g, const LabelMap& labels,
                                               const DirectedTwoFactorisation& dft,
                                               const FragmentPlan& plan) {
  std::vector<std::vector<int>> cycles;
  for (auto& assembled : assemble_j_factors(g, labels, dft, plan)) {
    FactorState final_state = many_repairs(assembled.state, assembled.schedule);
    for (int k = 0; k < final_state.factor_count(); ++k)
      cycles.push_back(final_state.cycle_of(k));
  }
  return cycles;
}

// ---------------------------------------------------------------------------
// Precondition checking
// ---------------------------------------------------------------------------

namespace {

struct Checker {
  PlanReport report;
  int n;
  bool odd_mode;

  void add(const std::string& name, bool pass, const std::string& detail = "") {
    report.checks.push_back({name, pass, pass ? "" : detail});
  }

  void check_partition(const std::string& name, const FragmentGraph& whole,
                       const std::vector<const FragmentGraph*>& parts) {
    int total = 0;
    bool disjoint = true;
    for (size_t i = 0; i < parts.size(); ++i) {
      total += parts[i]->edge_count();
      for (size_t j = i + 1; j < parts.size(); ++j)
        disjoint = disjoint && parts[i]->edge_disjoint(*parts[j]);
    }
    bool covers = disjoint && total == whole.edge_count();
    if (covers) {
      FragmentGraph u = unite_all(parts);
      covers = u == whole;
    }
    add(name, disjoint && covers, "pieces do not partition the fragment");
  }

  void check_degrees_equal(const std::string& name, const FragmentGraph& x,
                           const FragmentGraph& y, bool include_c) {
    int limit = 2 * n + (include_c && odd_mode ? 1 : 0);
    for (int code = 0; code < limit; ++code)
      if (x.degree_code(code) != y.degree_code(code)) {
        add(name, false, "degree mismatch at " + label_name(code, n));
        return;
      }
    add(name, true);
  }

  void check_degree_one_set(const std::string& name, const FragmentGraph& x,
                            const std::vector<int>& expected_codes) {
    std::set<int> expect(expected_codes.begin(), expected_codes.end());
    for (int code = 0; code < x.universe_size(); ++code) {
      bool want_one = expect.count(code) > 0;
      if ((x.degree_code(code) == 1) != want_one) {
        add(name, false, "degree-1 set differs at " + label_name(code, n));
        return;
      }
    }
    add(name, true);
  }

  void check_amalg_cycle(const std::string& name, const FragmentGraph& x, int length) {
    add(name, is_single_cycle(amalgamate(x), length),
        "amalgamation is not a single " + std::to_string(length) + "-cycle");
  }

  // Single cycle covering all non-isolated vertices (any length), optionally
  // with loops exactly at `loop_at` (vertex-disjoint from the cycle).
  void check_amalg_cycle_with_loops(const std::string& name, const FragmentGraph& x,
                                    const std::vector<int>& loop_at, int cycle_len = -1) {
    Multigraph m = amalgamate(x);
    std::multiset<int> loops_found;
    Multigraph rest(m.vertex_count());
    for (const auto& [u, v] : m.edges()) {
      if (u == v)
        loops_found.insert(u);
      else
        rest.add_edge(u, v);
    }
    std::multiset<int> loops_expected(loop_at.begin(), loop_at.end());
    if (loops_found != loops_expected) {
      add(name, false, "loop placement differs");
      return;
    }
    for (int v : loop_at)
      if (rest.degree(v) != 0) {
        add(name, false, "loop vertex also lies on the cycle");
        return;
      }
    int support = 0;
    for (int v = 0; v < rest.vertex_count(); ++v)
      if (rest.degree(v) > 0) ++support;
    int len = cycle_len >= 0 ? cycle_len : support;
    add(name, is_single_cycle(rest, len), "remainder is not a single cycle");
  }

  void check_component_count(const std::string& name, const FragmentGraph& x, int expected) {
    int got = static_cast<int>(edge_induced_components(x.edges()).size());
    Multigraph m = amalgamate(x);
    std::vector<VertexPair> plain;
    std::set<int> loop_only;
    for (const auto& [u, v] : m.edges())
      if (u != v) plain.push_back({u, v});
    auto comps = edge_induced_components(plain);
    std::set<int> covered;
    for (const auto& c : comps) covered.insert(c.begin(), c.end());
    int mg_comps = static_cast<int>(comps.size());
    for (const auto& [u, v] : m.edges())
      if (u == v && !covered.count(u) && loop_only.insert(u).second) ++mg_comps;
    add(name, got == expected && mg_comps == expected,
        "component count " + std::to_string(got) + "/" + std::to_string(mg_comps) +
            " != " + std::to_string(expected));
  }

  // Non-isolated part of ^A x is a path plus a loop at `loop_vertex`, with the
  // loop vertex off the path.
  void check_amalg_path_plus_loop(const std::string& name, const FragmentGraph& x,
                                  int loop_vertex) {
    Multigraph m = amalgamate(x);
    std::vector<VertexPair> plain;
    int loops = 0;
    bool loop_ok = true;
    for (const auto& [u, v] : m.edges()) {
      if (u == v) {
        ++loops;
        loop_ok = loop_ok && u == loop_vertex;
      } else {
        plain.push_back({u, v});
      }
    }
    bool path = loops == 1 && loop_ok;
    std::map<int, int> deg;
    for (const auto& [u, v] : plain) {
      ++deg[u];
      ++deg[v];
    }
    path = path && !deg.count(loop_vertex);
    int ones = 0;
    for (const auto& [v, d] : deg) {
      if (d == 1) ++ones;
      if (d > 2) path = false;
    }
    path = path && ones == 2 && edge_induced_components(plain).size() == 1;
    add(name, path, "^A shape is not path + loop");
  }

  void check_connectors(const std::vector<DesignatedConnector>& connectors) {
    for (const auto& conn : connectors) {
      ConnectorReport cr = validate_connector(conn.sets, conn.targets);
      add("connector " + conn.name, cr.all_ok,
          std::to_string(cr.failures.size()) + " failing linkage patterns");
    }
  }
};

// Maximal-path endpoint pattern of a piece expected to be two vertex-disjoint
// paths over {a_t, b_t, a_inf, b_inf} ends.
enum class PathPattern { none, tt, aa, ab };

PathPattern path_pair_pattern(const FragmentGraph& x, int t, int n) {
  std::map<int, int> deg;
  for (const auto& [u, v] : x.edges()) {
    ++deg[u];
    ++deg[v];
  }
  std::vector<int> ends;
  for (const auto& [code, d] : deg) {
    if (d > 2) return PathPattern::none;
    if (d == 1) ends.push_back(code);
  }
  if (ends.size() != 4) return PathPattern::none;
  auto comps = edge_induced_components(x.edges());
  if (comps.size() != 2) return PathPattern::none;
  int at = encode_label(FragmentLabel::a(t), n), bt = encode_label(FragmentLabel::b(t), n);
  int ai = encode_label(FragmentLabel::a(inf_index(n)), n),
      bi = encode_label(FragmentLabel::b(inf_index(n)), n);
  std::set<int> end_set(ends.begin(), ends.end());
  if (end_set != std::set<int>{at, bt, ai, bi}) return PathPattern::none;
  auto same_comp = [&](int x1, int x2) {
    for (const auto& c : comps) {
      bool h1 = std::binary_search(c.begin(), c.end(), x1);
      bool h2 = std::binary_search(c.begin(), c.end(), x2);
      if (h1 || h2) return h1 && h2;
    }
    return false;
  };
  if (same_comp(at, bt) && same_comp(ai, bi)) return PathPattern::tt;
  if (same_comp(at, ai) && same_comp(bt, bi)) return PathPattern::aa;
  if (same_comp(at, bi) && same_comp(bt, ai)) return PathPattern::ab;
  return PathPattern::none;
}

void check_odd_cc(Checker& ck, const std::string& prefix, const OddCCRecipe& r,
                  const FragmentGraph& fragment, int n) {
  auto name = [&](const std::string& s) { return prefix + s; };
  ck.check_partition(name("pieces partition H (S-side)"), fragment,
                     {&r.s, &r.sp, &r.r, &r.rp, &r.c, &r.cp});
  ck.check_partition(name("pieces partition H (T-side)"), fragment,
                     {&r.t_piece, &r.tp, &r.r, &r.rp, &r.c, &r.cp});
  ck.check_degrees_equal(name("(1) deg S = deg T on A∪B"), r.s, r.t_piece, false);
  ck.check_degrees_equal(name("(1) deg S' = deg T' on A∪B"), r.sp, r.tp, false);
  int ai = encode_label(FragmentLabel::a(inf_index(n)), n);
  int bi = encode_label(FragmentLabel::b(inf_index(n)), n);
  ck.add(name("(2) S,S' have degree 1 at a_inf,b_inf"),
         r.s.degree_code(ai) == 1 && r.s.degree_code(bi) == 1 && r.sp.degree_code(ai) == 1 &&
             r.sp.degree_code(bi) == 1,
         "infinity degrees differ from 1");
  int cc = 2 * n;
  {
    std::multiset<int> sc{r.s.degree_code(cc), r.t_piece.degree_code(cc)};
    std::multiset<int> spc{r.sp.degree_code(cc), r.tp.degree_code(cc)};
    int e1 = r.s.edge_count() + r.r.edge_count() + r.c.edge_count();
    int e2 = r.t_piece.edge_count() + r.r.edge_count() + r.cp.edge_count();
    int e3 = r.sp.edge_count() + r.rp.edge_count() + r.cp.edge_count();
    int e4 = r.tp.edge_count() + r.rp.edge_count() + r.c.edge_count();
    bool ok = sc == std::multiset<int>{0, 2} && spc == std::multiset<int>{0, 2} &&
              std::multiset<int>{e1, e2} == std::multiset<int>{n, n + 1} &&
              std::multiset<int>{e3, e4} == std::multiset<int>{n, n + 1};
    ck.add(name("(3) c-degrees {0,2} and sizes {n,n+1}"), ok, "size or c-degree pattern differs");
  }
  auto endpoint_pairing_matches = [&](const FragmentGraph& a, const FragmentGraph& b) {
    std::vector<int> ones;
    for (int code = 0; code < a.universe_size(); ++code)
      if (a.degree_code(code) == 1) ones.push_back(code);
    auto ca = edge_induced_components(a.edges());
    auto cb = edge_induced_components(b.edges());
    auto same = [](const std::vector<std::vector<int>>& comps, int x, int y) {
      for (const auto& c : comps) {
        bool hx = std::binary_search(c.begin(), c.end(), x);
        bool hy = std::binary_search(c.begin(), c.end(), y);
        if (hx || hy) return hx && hy;
      }
      return false;
    };
    for (size_t i = 0; i < ones.size(); ++i)
      for (size_t j = i + 1; j < ones.size(); ++j)
        if (same(ca, ones[i], ones[j]) != same(cb, ones[i], ones[j])) return false;
    return true;
  };
  ck.add(name("(4) S/T endpoint pairings agree"), endpoint_pairing_matches(r.s, r.t_piece),
         "component pairing differs");
  ck.add(name("(5) S'/T' endpoint pairings agree"), endpoint_pairing_matches(r.sp, r.tp),
         "component pairing differs");
  ck.check_degrees_equal(name("(6) deg C = deg C'"), r.c, r.cp, true);
  {
    FragmentGraph cu = r.c.unite(r.cp);
    int len = cu.edge_count();
    bool is_cycle = edge_induced_components(cu.edges()).size() == 1 && (len == 4 || len == 6);
    std::map<int, int> deg;
    for (const auto& [u, v] : cu.edges()) {
      ++deg[u];
      ++deg[v];
    }
    for (const auto& [code, d] : deg) is_cycle = is_cycle && d == 2;
    int at = encode_label(FragmentLabel::a(r.t), n), bt = encode_label(FragmentLabel::b(r.t), n);
    ck.add(name("(7) C∪C' is a 4- or 6-cycle with a_t b_t in C'"),
           is_cycle && r.cp.has_edge_code(at, bt), "C∪C' shape differs");
  }
  {
    Multigraph ac = amalgamate(r.c);
    bool path = true;
    int odd = 0, support = 0;
    for (int v = 0; v < ac.vertex_count(); ++v) {
      int d = ac.degree(v);
      if (d > 0) ++support;
      if (d == 1) ++odd;
      if (d > 2) path = false;
      if (ac.has_loop(v)) path = false;
    }
    std::vector<VertexPair> plain = ac.edges();
    path = path && odd == 2 && static_cast<int>(edge_induced_components(plain).size()) == 1;
    ck.add(name("(8) ^A C is a path"), path, "^A C is not a path");
  }
  ck.check_amalg_path_plus_loop(name("(9) ^A C' is a path plus a loop at t"), r.cp, r.t);
  ck.check_amalg_cycle_with_loops(name("(10a) ^A(S∪R∪C) is a cycle"), r.s.unite(r.r).unite(r.c),
                                  {});
  ck.check_amalg_cycle_with_loops(name("(10b) ^A(T'∪R'∪C) is a cycle"),
                                  r.tp.unite(r.rp).unite(r.c), {});
  ck.check_amalg_cycle_with_loops(name("(11a) ^A(T∪R∪C') is a cycle plus loop at t"),
                                  r.t_piece.unite(r.r).unite(r.cp), {r.t});
  ck.check_amalg_cycle_with_loops(name("(11b) ^A(S'∪R'∪C') is a cycle plus loop at t"),
                                  r.sp.unite(r.rp).unite(r.cp), {r.t});
}

}  // namespace

PlanReport check_plan_preconditions(const FragmentPlan& plan, int n, bool odd_mode) {
  Checker ck;
  ck.report.plan_name = plan.name;
  ck.n = n;
  ck.odd_mode = odd_mode;
  int ai = encode_label(FragmentLabel::a(inf_index(n)), n);
  int bi = encode_label(FragmentLabel::b(inf_index(n)), n);

  if (const auto* r = std::get_if<EvenMultiRecipe>(&plan.recipe)) {
    std::vector<const FragmentGraph*> parts;
    for (const auto& x : r->x) parts.push_back(&x);
    ck.add("r >= 2 and s != t", r->x.size() >= 2 && r->s != r->t && r->s < n - 1 && r->t < n - 1,
           "parameters out of range");
    ck.check_partition("pieces partition H", plan.fragment, parts);
    ck.check_degrees_equal("(1) deg X1 = deg X2", r->x[0], r->x[1], false);
    ck.check_degree_one_set(
        "(2) X1 degree-1 set is {a_s,b_s,a_t,b_t,a_inf,b_inf}", r->x[0],
        {encode_label(FragmentLabel::a(r->s), n), encode_label(FragmentLabel::b(r->s), n),
         encode_label(FragmentLabel::a(r->t), n), encode_label(FragmentLabel::b(r->t), n), ai,
         bi});
    ck.check_amalg_cycle("(3) ^A X1 is an n-cycle", r->x[0], n);
    ck.check_component_count("(4) X2 and ^A X2 have 3 components", r->x[1], 3);
    for (size_t k = 2; k < r->x.size(); ++k)
      ck.check_amalg_cycle("(5) ^A X" + std::to_string(k + 1) + " is an n-cycle", r->x[k], n);
  } else if (const auto* r = std::get_if<EvenSwapRecipe>(&plan.recipe)) {
    ck.add("s != t", r->s != r->t && r->s < n - 1 && r->t < n - 1, "parameters out of range");
    ck.check_partition("{X1,X2,X3} partitions H", plan.fragment, {&r->x1, &r->x2, &r->x3});
    ck.check_partition("{X1',X2',X3} partitions H", plan.fragment, {&r->x1p, &r->x2p, &r->x3});
    ck.check_degrees_equal("(1) deg X1 = deg X2'", r->x1, r->x2p, false);
    ck.check_degree_one_set(
        "(2) X1 degree-1 set is {a_s,b_s,a_inf,b_inf}", r->x1,
        {encode_label(FragmentLabel::a(r->s), n), encode_label(FragmentLabel::b(r->s), n), ai,
         bi});
    ck.check_degrees_equal("(3) deg X1' = deg X2", r->x1p, r->x2, false);
    ck.check_degree_one_set(
        "(4) X1' degree-1 set is {a_t,b_t,a_inf,b_inf}", r->x1p,
        {encode_label(FragmentLabel::a(r->t), n), encode_label(FragmentLabel::b(r->t), n), ai,
         bi});
    ck.check_amalg_cycle("(5a) ^A X1 is an n-cycle", r->x1, n);
    ck.check_amalg_cycle("(5b) ^A X1' is an n-cycle", r->x1p, n);
    ck.check_component_count("(6a) X2 has 2 components", r->x2, 2);
    ck.check_component_count("(6b) X2' has 2 components", r->x2p, 2);
    ck.check_amalg_cycle("(7) ^A X3 is an n-cycle", r->x3, n);
  } else if (const auto* r = std::get_if<EvenEasyRecipe>(&plan.recipe)) {
    ck.check_partition("{S,S',R,R'} partitions H", plan.fragment, {&r->s, &r->sp, &r->r, &r->rp});
    ck.check_amalg_cycle("(1) ^A(S∪R) is an n-cycle", r->s.unite(r->r), n);
    ck.check_amalg_cycle("(2) ^A(S'∪R') is an n-cycle", r->sp.unite(r->rp), n);
  } else if (const auto* r = std::get_if<EvenCCRecipe>(&plan.recipe)) {
    ck.add("|T| in {1,2}", r->t_set.size() == 1 || r->t_set.size() == 2, "bad T");
    ck.check_partition("{S,S',R,R',C,C'} partitions H", plan.fragment,
                       {&r->s, &r->sp, &r->r, &r->rp, &r->c, &r->cp});
    ck.check_degrees_equal("(1) deg C = deg C'", r->c, r->cp, false);
    {
      FragmentGraph cu = r->c.unite(r->cp);
      int want = 2 * (static_cast<int>(r->t_set.size()) + 1);
      bool cyc = cu.edge_count() == want &&
                 edge_induced_components(cu.edges()).size() == 1;
      std::map<int, int> deg;
      for (const auto& [u, v] : cu.edges()) {
        ++deg[u];
        ++deg[v];
      }
      for (const auto& [code, d] : deg) cyc = cyc && d == 2;
      bool loops_ok = true;
      for (int j : r->t_set)
        loops_ok = loops_ok && r->cp.has_edge_code(encode_label(FragmentLabel::a(j), n),
                                                   encode_label(FragmentLabel::b(j), n));
      ck.add("(2) C∪C' is a 2(|T|+1)-cycle with a_j b_j in C'", cyc && loops_ok,
             "C∪C' shape differs");
    }
    ck.check_amalg_cycle("(3) ^A(S∪R∪C) is an n-cycle", r->s.unite(r->r).unite(r->c), n);
    ck.check_amalg_cycle_with_loops("(4) ^A(S'∪R'∪C') is an (n-|T|)-cycle plus loops on T",
                                    r->sp.unite(r->rp).unite(r->cp), r->t_set,
                                    n - static_cast<int>(r->t_set.size()));
  } else if (const auto* r = std::get_if<OddCCRecipe>(&plan.recipe)) {
    check_odd_cc(ck, "", *r, plan.fragment, n);
  } else if (const auto* r = std::get_if<OddBigRecipe>(&plan.recipe)) {
    FragmentGraph expected_x(n, true), expected_xp(n, true);
    expected_x.add_edge(FragmentLabel::a(inf_index(n)), FragmentLabel::c());
    expected_x.add_edge(FragmentLabel::c(), FragmentLabel::b(inf_index(n)));
    expected_xp.add_edge(FragmentLabel::a(inf_index(n)), FragmentLabel::b(inf_index(n)));
    ck.add("X = [a_inf,c,b_inf] and X' = [a_inf,b_inf]",
           r->x == expected_x && r->xp == expected_xp, "triangle pieces differ");
    FragmentGraph h1 = unite_all({&r->h1.s, &r->h1.sp, &r->h1.r, &r->h1.rp, &r->h1.c, &r->h1.cp});
    FragmentGraph h2 = unite_all({&r->h2.s, &r->h2.sp, &r->h2.r, &r->h2.rp, &r->h2.c, &r->h2.cp});
    ck.check_partition("{X,X',P1,P2,H1,H2} partitions H", plan.fragment,
                       {&r->x, &r->xp, &r->p1, &r->p2, &h1, &h2});
    for (int i : {1, 2}) {
      const FragmentGraph& p = i == 1 ? r->p1 : r->p2;
      std::map<int, int> deg;
      for (const auto& [u, v] : p.edges()) {
        ++deg[u];
        ++deg[v];
      }
      int at = encode_label(FragmentLabel::a(r->t), n), bt = encode_label(FragmentLabel::b(r->t), n);
      bool path = deg.size() == p.edges().size() + 1 &&
                  edge_induced_components(p.edges()).size() == 1 && deg[at] == 1 && deg[bt] == 1;
      for (const auto& [code, d] : deg) path = path && d <= 2;
      ck.add("(1) P" + std::to_string(i) + " is an a_t,b_t-path", path, "P shape differs");
      Multigraph ap = amalgamate(p);
      bool cyc = is_single_cycle(ap, n - 1) && ap.degree(n - 1) == 0 && ap.degree(n) == 0;
      ck.add("(2) ^A P" + std::to_string(i) + " is an (n-1)-cycle on {0..n-2}", cyc,
             "^A P shape differs");
      const FragmentGraph& u_piece = i == 1 ? r->p1 : r->p2;
      int u_label = i == 1 ? r->u1_label : r->u2_label;
      bool covered = u_piece.degree_code(u_label) > 0;
      ck.add("(4) u" + std::to_string(i) + " lies on P" + std::to_string(i), covered,
             "u label not on path");
    }
    check_odd_cc(ck, "H1 ", r->h1, h1, n);
    check_odd_cc(ck, "H2 ", r->h2, h2, n);
  } else if (const auto* r = std::get_if<FourDecompRecipe>(&plan.recipe)) {
    ck.check_partition("{X1,Y1} partitions H", plan.fragment, {&r->x1, &r->y1});
    ck.check_partition("{X1',Y1'} partitions H", plan.fragment, {&r->x1p, &r->y1p});
    ck.check_partition("{X2,Y2} partitions H", plan.fragment, {&r->x2, &r->y2});
    ck.check_partition("{X2',Y2'} partitions H", plan.fragment, {&r->x2p, &r->y2p});
    {
      Multigraph ax = amalgamate(r->x1), ay = amalgamate(r->y1);
      auto support = [&](const Multigraph& m) {
        std::set<int> s;
        for (const auto& [u, v] : m.edges()) {
          s.insert(u);
          s.insert(v);
        }
        return s;
      };
      auto two_regular = [&](const Multigraph& m) {
        for (int v : support(m))
          if (m.degree(v) != 2) return false;
        return true;
      };
      std::set<int> nn;
      for (int i = 0; i < n; ++i) nn.insert(i);
      std::set<int> nnc = nn;
      nnc.insert(n);
      bool ok = two_regular(ax) && two_regular(ay) &&
                ((support(ax) == nn && support(ay) == nnc) ||
                 (support(ax) == nnc && support(ay) == nn));
      ck.add("(a) ^A X1, ^A Y1 2-regular covering {N_n, N_n∪{c}}", ok, "supports differ");
    }
    ck.check_degrees_equal("(b) deg X1 = deg X1' on A∪B", r->x1, r->x1p, false);
    ck.check_degrees_equal("(b) deg X1 = deg X2 on A∪B", r->x1, r->x2, false);
    ck.check_degrees_equal("(b) deg X1 = deg X2' on A∪B", r->x1, r->x2p, false);
    ck.check_degrees_equal("(b) deg Y1 = deg Y1' on A∪B", r->y1, r->y1p, false);
    ck.check_degrees_equal("(b) deg Y1 = deg Y2 on A∪B", r->y1, r->y2, false);
    ck.check_degrees_equal("(b) deg Y1 = deg Y2' on A∪B", r->y1, r->y2p, false);
    {
      int cc = 2 * n;
      bool ok = r->x1.degree_code(cc) == r->x2.degree_code(cc) &&
                r->x1.degree_code(cc) == r->y1p.degree_code(cc) &&
                r->x1.degree_code(cc) == r->y2p.degree_code(cc) &&
                r->y1.degree_code(cc) == r->y2.degree_code(cc) &&
                r->y1.degree_code(cc) == r->x1p.degree_code(cc) &&
                r->y1.degree_code(cc) == r->x2p.degree_code(cc);
      ck.add("(c) c-degree classes match", ok, "c degrees differ");
    }
    {
      PathPattern x1 = path_pair_pattern(r->x1, r->t, n);
      PathPattern x2 = path_pair_pattern(r->x2, r->t, n);
      PathPattern y1 = path_pair_pattern(r->y1, r->t, n);
      PathPattern y2 = path_pair_pattern(r->y2, r->t, n);
      bool d = x1 == PathPattern::tt && x2 == PathPattern::tt;
      bool d1 = y1 == PathPattern::aa && (y2 == PathPattern::ab || y2 == PathPattern::tt);
      bool d2 = y1 == PathPattern::ab && (y2 == PathPattern::aa || y2 == PathPattern::tt);
      ck.add("(d) X1,X2 t/inf path pairs with matching Y patterns", d && (d1 || d2),
             "path-end pattern differs");
      PathPattern y1p = path_pair_pattern(r->y1p, r->t, n);
      PathPattern y2p = path_pair_pattern(r->y2p, r->t, n);
      PathPattern x1p = path_pair_pattern(r->x1p, r->t, n);
      PathPattern x2p = path_pair_pattern(r->x2p, r->t, n);
      bool e = y1p == PathPattern::tt && y2p == PathPattern::tt;
      bool e1 = x1p == PathPattern::aa && (x2p == PathPattern::ab || x2p == PathPattern::tt);
      bool e2 = x1p == PathPattern::ab && (x2p == PathPattern::aa || x2p == PathPattern::tt);
      ck.add("(e) Y1',Y2' t/inf path pairs with matching X' patterns", e && (e1 || e2),
             "path-end pattern differs");
    }
  } else if (const auto* r = std::get_if<DirectRecipe>(&plan.recipe)) {
    for (size_t cls = 0; cls < r->pieces.size(); ++cls) {
      std::vector<const FragmentGraph*> parts;
      for (const auto& p : r->pieces[cls]) parts.push_back(&p);
      ck.check_partition("class " + std::to_string(cls) + " pieces partition H", plan.fragment,
                         parts);
    }
    if (!r->arc_pair_mode) {
      int factors = static_cast<int>(r->pieces[0].size());
      for (int j = 0; j < factors; ++j) {
        bool equal = true;
        for (size_t cls = 1; cls < r->pieces.size(); ++cls)
          for (int code = 0; code < 2 * n; ++code)
            equal = equal && r->pieces[cls][j].degree_code(code) ==
                                 r->pieces[0][j].degree_code(code);
        ck.add("factor " + std::to_string(j + 1) + " A∪B degrees equal across classes", equal,
               "class degree profiles differ");
        bool two_reg = true;
        for (int i = 0; i < n; ++i)
          two_reg = two_reg &&
                    r->pieces[0][j].degree_code(encode_label(FragmentLabel::a(i), n)) +
                            r->pieces[0][j].degree_code(encode_label(FragmentLabel::b(i), n)) ==
                        2;
        ck.add("factor " + std::to_string(j + 1) + " amalgamated degree 2 at every index",
               two_reg, "degree identity fails");
      }
      if (odd_mode) {
        int cc = 2 * n;
        int factors_n = static_cast<int>(r->pieces[0].size());
        for (int j = 0; j < factors_n; ++j) {
          std::vector<int> cdeg;
          for (const auto& per_class : r->pieces) cdeg.push_back(per_class[j].degree_code(cc));
          bool all_zero = std::all_of(cdeg.begin(), cdeg.end(), [](int d) { return d == 0; });
          bool coord_ok = false;
          size_t classes = r->pieces.size();
          for (size_t p = 0; p < r->partition_links.size() && !coord_ok; ++p) {
            bool links_f = std::find(r->partition_links[p].begin(), r->partition_links[p].end(),
                                     kMatchingFactor) != r->partition_links[p].end();
            if (!links_f) continue;
            for (int base : {0, 2}) {
              bool match = true;
              for (size_t cls = 0; cls < classes; ++cls) {
                bool bit = (cls >> p) & 1;
                int want = bit ? (2 - base) : base;
                match = match && cdeg[cls] == want;
              }
              coord_ok = coord_ok || match;
            }
          }
          ck.add("factor " + std::to_string(j + 1) + " c-degree straddles an F-linking partition",
                 all_zero || coord_ok, "c degrees do not straddle");
        }
      }
    }
  }

  ck.check_connectors(plan.connectors);
  return ck.report;
}

}  // namespace linehamd
