#ifndef LINEHAMD_LABELS_HPP
#define LINEHAMD_LABELS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "linehamd/factorize.hpp"
#include "linehamd/graph.hpp"
#include "linehamd/line_graph.hpp"

namespace linehamd {

// Index set N_n = {0,...,n-2, inf}; inf is stored as n-1 so the set is a dense
// range. The c vertex (odd mode only) is a separate label kind.
inline int inf_index(int n) { return n - 1; }

enum class LabelKind { A, B, C };

struct FragmentLabel {
  LabelKind kind = LabelKind::A;
  int index = 0;  // in N_n; ignored for C

  static FragmentLabel a(int i) { return {LabelKind::A, i}; }
  static FragmentLabel b(int i) { return {LabelKind::B, i}; }
  static FragmentLabel c() { return {LabelKind::C, 0}; }
  bool operator==(const FragmentLabel&) const = default;
};

// Encoding over the label universe: a_i -> i, b_i -> n+i, c -> 2n.
int encode_label(const FragmentLabel& l, int n);
FragmentLabel decode_label(int code, int n);
std::string label_name(int code, int n);          // "a0", "binf", "c", ...
int parse_label(std::string_view name, int n);    // inverse of label_name

// Subgraph of K_{A_n ∪ B_n} (even mode) or K_{A_n ∪ B_n ∪ {c}} (odd mode),
// stored as a sorted set of encoded label pairs.
class FragmentGraph {
 public:
  FragmentGraph() = default;
  FragmentGraph(int n, bool odd_mode) : n_(n), odd_mode_(odd_mode) {}

  int n() const { return n_; }
  bool odd_mode() const { return odd_mode_; }
  int universe_size() const { return 2 * n_ + (odd_mode_ ? 1 : 0); }
  const std::vector<VertexPair>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  void add_edge(FragmentLabel x, FragmentLabel y);
  void add_edge_code(int x, int y);
  // Path given as label sequence; consecutive labels become edges.
  void add_path(const std::vector<FragmentLabel>& path);
  // Compact notation mirroring the bracket lists: "ainf b1 c a2 a0 | a3 b3".
  void add_paths(std::string_view spec);
  void remove_edge_code(int x, int y);  // throws if absent

  bool has_edge_code(int x, int y) const;
  int degree_code(int code) const;
  int degree(FragmentLabel l) const { return degree_code(encode_label(l, n_)); }

  FragmentGraph unite(const FragmentGraph& rhs) const;  // throws on overlap
  bool edge_disjoint(const FragmentGraph& rhs) const;
  bool operator==(const FragmentGraph&) const = default;

  // Relabels subscript i -> i + 2*steps (mod n-1); inf and c are fixed.
  FragmentGraph rotated(int steps) const;

  static FragmentGraph from_paths(int n, bool odd_mode, std::string_view spec);

 private:
  int n_ = 0;
  bool odd_mode_ = false;
  std::vector<VertexPair> edges_;  // encoded, normalized, sorted
};

// ^A H: amalgamate a_i and b_i into vertex i (c stays, at index n); a_i b_i
// edges become loops.
Multigraph amalgamate(const FragmentGraph& h);

// True iff the multigraph's non-isolated part is a single cycle on `length`
// vertices (a loop counts as a 1-cycle, two parallel edges as a 2-cycle).
bool is_single_cycle(const Multigraph& m, int length);

// Per-vertex labels a^v_i / b^v_i / c^v resolving to line vertices (edge ids).
class LabelMap {
 public:
  static LabelMap build(const Graph& g, const DirectedTwoFactorisation& dft);

  int n() const { return n_; }
  bool odd_mode() const { return odd_mode_; }
  int a(int v, int i) const { return a_[v * n_ + i]; }
  int b(int v, int i) const { return b_[v * n_ + i]; }
  int c(int v) const { return c_[v]; }
  int line_vertex(int v, const FragmentLabel& l) const;

 private:
  int n_ = 0;
  bool odd_mode_ = false;
  std::vector<int> a_, b_, c_;
};

// σ_v(H): the image of H inside the clique L(G)_v, as line-vertex pairs.
std::vector<VertexPair> sigma_edges(const LabelMap& labels, int v, const FragmentGraph& h);

}  // namespace linehamd

#endif
