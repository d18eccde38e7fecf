// Internal helpers shared by the even- and odd-mode catalog builders.
#ifndef LINEHAMD_CATALOG_DETAIL_HPP
#define LINEHAMD_CATALOG_DETAIL_HPP

#include <string>
#include <vector>

#include "linehamd/catalog.hpp"

namespace linehamd::catalog_detail {

struct Ctx {
  int n;
  bool odd;

  int mod() const { return n - 1; }
  int wrap(int i) const { return ((i % mod()) + mod()) % mod(); }
  FragmentLabel A(int i) const { return FragmentLabel::a(wrap(i)); }
  FragmentLabel B(int i) const { return FragmentLabel::b(wrap(i)); }
  FragmentLabel Ainf() const { return FragmentLabel::a(inf_index(n)); }
  FragmentLabel Binf() const { return FragmentLabel::b(inf_index(n)); }
  FragmentLabel C() const { return FragmentLabel::c(); }

  FragmentGraph empty() const { return FragmentGraph(n, odd); }
  FragmentGraph from(std::string_view spec) const { return FragmentGraph::from_paths(n, odd, spec); }
  FragmentGraph path(const std::vector<FragmentLabel>& p) const {
    FragmentGraph g(n, odd);
    g.add_path(p);
    return g;
  }
};

std::vector<int> seq(int from, int to, int step);
std::vector<int> weave(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> cat(std::vector<int> a, const std::vector<int>& b);
std::vector<FragmentLabel> letters(const Ctx& ctx, char kind, const std::vector<int>& idx);

FragmentGraph complete_fragment(int n, bool odd);
FragmentGraph subtract(const FragmentGraph& whole, const FragmentGraph& part);
void add_check(std::vector<CheckResult>& out, const std::string& name, bool pass,
               const std::string& detail = "");

std::vector<FragmentGraph> split_pool(
    const FragmentGraph& pool, const std::vector<Multigraph>& targets,
    const std::vector<std::pair<int, VertexPair>>& forced = {});

DesignatedConnector connector_from(const std::string& name, const std::vector<FragmentGraph>& sets,
                                   const std::vector<int>& target_codes);
std::vector<int> inf_targets(const Ctx& ctx);

struct ConnSub {
  FragmentLabel alpha, beta, u, v, w, x;
};
std::vector<FragmentGraph> conn_case0(const Ctx& c, const ConnSub& s);
std::vector<FragmentGraph> conn_case1(const Ctx& c, const ConnSub& s);
std::vector<FragmentGraph> conn_case2(const Ctx& c, const ConnSub& s);
std::vector<FragmentGraph> conn_case3(const Ctx& c, const ConnSub& s);
std::vector<FragmentGraph> conn_case4(const Ctx& c, const ConnSub& s);

// Condition-(4) connector of the big odd recipe: the c-carrying piece, its
// partner, and {a_inf c, c b_inf, u v} with v = the other c-neighbor.
DesignatedConnector odd_big_connector(const Ctx& ctx, const std::string& name,
                                      const FragmentGraph& c_piece, const FragmentGraph& other,
                                      const FragmentGraph& long_path, int u_code);

void add_orbit_checks(Catalog& cat, const FragmentGraph& z, const FragmentGraph& qq);

// One amalgamated target shape: paths over plain indices (never inf or c).
struct PathDesign {
  // Alternative end pairings; the first feasible one is used.
  std::vector<std::vector<std::pair<int, int>>> end_options;
  // Indices the design must visit; option end vertices are excluded on the fly.
  std::vector<int> coverage;
  std::vector<VertexPair> required_pairs;  // index pairs the design must contain
  std::vector<int> forced_first;           // per path: mandatory first step, or -1
};

// Finds index paths for every design so the per-orbit-class edge counts of
// the residual pool are consumed exactly (each class holds pool_count/q).
std::vector<std::vector<std::vector<int>>> design_index_paths(
    int n, bool odd_mode, const std::vector<PathDesign>& specs, const FragmentGraph& pool, int q);

Multigraph amalg_of_index_paths(int n, bool odd_mode,
                                const std::vector<std::vector<int>>& paths);
Multigraph rotate_amalg(const Multigraph& m, int steps, int n);

// Concrete edges for designed index paths, drawn from the pool; per-path end
// labels are fixed and interior letter choices are resolved deterministically.
FragmentGraph materialize_paths(const Ctx& ctx, const std::vector<std::vector<int>>& index_paths,
                                const std::vector<std::pair<FragmentLabel, FragmentLabel>>& ends,
                                const FragmentGraph& pool, const FragmentGraph& used);

Catalog catalog_odd_impl(int n);

}  // namespace linehamd::catalog_detail

#endif
