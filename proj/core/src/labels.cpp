#include "linehamd/labels.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace linehamd {

int encode_label(const FragmentLabel& l, int n) {
  switch (l.kind) {
    case LabelKind::A:
    case LabelKind::B: {
      if (l.index < 0 || l.index >= n) throw ValidationError("label index out of range");
      return (l.kind == LabelKind::A ? 0 : n) + l.index;
    }
    case LabelKind::C:
      return 2 * n;
  }
  throw InternalError("bad label kind");
}

FragmentLabel decode_label(int code, int n) {
  if (code < 0 || code > 2 * n) throw ValidationError("label code out of range");
  if (code == 2 * n) return FragmentLabel::c();
  if (code < n) return FragmentLabel::a(code);
  return FragmentLabel::b(code - n);
}

std::string label_name(int code, int n) {
  FragmentLabel l = decode_label(code, n);
  if (l.kind == LabelKind::C) return "c";
  std::string s(l.kind == LabelKind::A ? "a" : "b");
  return s + (l.index == inf_index(n) ? "inf" : std::to_string(l.index));
}

int parse_label(std::string_view name, int n) {
  if (name == "c") return encode_label(FragmentLabel::c(), n);
  if (name.size() < 2 || (name[0] != 'a' && name[0] != 'b'))
    throw ValidationError("bad label '" + std::string(name) + "'");
  LabelKind kind = name[0] == 'a' ? LabelKind::A : LabelKind::B;
  std::string_view idx = name.substr(1);
  int i;
  if (idx == "inf") {
    i = inf_index(n);
  } else {
    auto [p, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), i);
    if (ec != std::errc() || p != idx.data() + idx.size())
      throw ValidationError("bad label '" + std::string(name) + "'");
  }
  return encode_label({kind, i}, n);
}

void FragmentGraph::add_edge(FragmentLabel x, FragmentLabel y) {
  add_edge_code(encode_label(x, n_), encode_label(y, n_));
}

void FragmentGraph::add_edge_code(int x, int y) {
  if (!odd_mode_ && (x == 2 * n_ || y == 2 * n_))
    throw ValidationError("c label is only legal in odd mode");
  if (x == y) throw ValidationError("fragment edges cannot be loops");
  VertexPair key = normalized(x, y);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it != edges_.end() && *it == key)
    throw ValidationError("duplicate fragment edge " + label_name(x, n_) + label_name(y, n_));
  edges_.insert(it, key);
}

void FragmentGraph::add_path(const std::vector<FragmentLabel>& path) {
  for (size_t i = 0; i + 1 < path.size(); ++i) add_edge(path[i], path[i + 1]);
}

void FragmentGraph::add_paths(std::string_view spec) {
  std::stringstream ss{std::string(spec)};
  std::string tok;
  int prev = -1;
  while (ss >> tok) {
    if (tok == "|") {
      prev = -1;
      continue;
    }
    int code = parse_label(tok, n_);
    if (prev >= 0) add_edge_code(prev, code);
    prev = code;
  }
}

void FragmentGraph::remove_edge_code(int x, int y) {
  VertexPair key = normalized(x, y);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key)
    throw ValidationError("fragment edge to remove is absent: " + label_name(x, n_) +
                          label_name(y, n_));
  edges_.erase(it);
}

bool FragmentGraph::has_edge_code(int x, int y) const {
  VertexPair key = normalized(x, y);
  return std::binary_search(edges_.begin(), edges_.end(), key);
}

int FragmentGraph::degree_code(int code) const {
  int d = 0;
  for (const auto& [x, y] : edges_) d += (x == code) + (y == code);
  return d;
}

FragmentGraph FragmentGraph::unite(const FragmentGraph& rhs) const {
  if (n_ != rhs.n_ || odd_mode_ != rhs.odd_mode_)
    throw ValidationError("fragment union across different universes");
  FragmentGraph out = *this;
  for (const auto& [x, y] : rhs.edges_) out.add_edge_code(x, y);
  return out;
}

bool FragmentGraph::edge_disjoint(const FragmentGraph& rhs) const {
  for (const auto& [x, y] : rhs.edges_)
    if (has_edge_code(x, y)) return false;
  return true;
}

FragmentGraph FragmentGraph::rotated(int steps) const {
  int mod = n_ - 1;
  auto rot = [&](int code) {
    FragmentLabel l = decode_label(code, n_);
    if (l.kind == LabelKind::C || l.index == inf_index(n_)) return code;
    int shifted = ((l.index + 2 * steps) % mod + mod) % mod;
    return encode_label({l.kind, shifted}, n_);
  };
  FragmentGraph out(n_, odd_mode_);
  for (const auto& [x, y] : edges_) out.add_edge_code(rot(x), rot(y));
  return out;
}

FragmentGraph FragmentGraph::from_paths(int n, bool odd_mode, std::string_view spec) {
  FragmentGraph h(n, odd_mode);
  h.add_paths(spec);
  return h;
}

Multigraph amalgamate(const FragmentGraph& h) {
  int n = h.n();
  Multigraph m(n + (h.odd_mode() ? 1 : 0));
  auto merge = [&](int code) {
    FragmentLabel l = decode_label(code, n);
    return l.kind == LabelKind::C ? n : l.index;
  };
  for (const auto& [x, y] : h.edges()) m.add_edge(merge(x), merge(y));
  return m;
}

bool is_single_cycle(const Multigraph& m, int length) {
  if (m.edge_count() != length) return false;
  std::vector<int> active;
  for (int v = 0; v < m.vertex_count(); ++v)
    if (m.degree(v) > 0) active.push_back(v);
  // Loops and parallel pairs are cycles of length 1 and 2.
  if (length == 1) return active.size() == 1 && m.edge_count() == 1 && m.has_loop(active[0]);
  for (int v : active)
    if (m.degree(v) != 2) return false;
  if (static_cast<int>(active.size()) != length) return false;
  std::vector<VertexPair> plain;
  for (const auto& e : m.edges())
    if (e.first != e.second) plain.push_back(e);
  if (static_cast<int>(plain.size()) != length) return false;  // no loops allowed here
  auto labels = component_labels(m.vertex_count(), plain);
  int lbl = labels[active[0]];
  for (int v : active)
    if (labels[v] != lbl) return false;
  return true;
}

LabelMap LabelMap::build(const Graph& g, const DirectedTwoFactorisation& dft) {
  LabelMap map;
  map.n_ = dft.n();
  map.odd_mode_ = dft.odd_mode();
  int vc = g.vertex_count();
  map.a_.assign(static_cast<size_t>(vc) * map.n_, -1);
  map.b_.assign(static_cast<size_t>(vc) * map.n_, -1);
  if (map.odd_mode_) map.c_ = dft.matching_edge;

  std::vector<int> covered(g.edge_count(), 0);
  for (int i = 0; i < map.n_; ++i) {
    const auto& f = dft.factors[i];
    if (f.size() != vc) throw ValidationError("factor does not span the graph");
    for (int u = 0; u < vc; ++u) {
      int v = f.successor[u];
      int e = f.arc_edge[u];
      if (e < 0 || e >= g.edge_count() || g.edge_between(u, v) != e)
        throw ValidationError("factor edge missing from graph");
      map.b_[u * map.n_ + i] = e;
      map.a_[v * map.n_ + i] = e;
      ++covered[e];
    }
  }
  if (map.odd_mode_) {
    if (static_cast<int>(map.c_.size()) != vc)
      throw ValidationError("matching must assign an edge to every vertex");
    for (int v = 0; v < vc; ++v) {
      int e = map.c_[v];
      if (e < 0 || e >= g.edge_count() || (g.edge(e).first != v && g.edge(e).second != v))
        throw ValidationError("matching edge missing from graph");
      if (g.edge(e).first == v) ++covered[e];
    }
  }
  for (int e = 0; e < g.edge_count(); ++e)
    if (covered[e] != 1)
      throw ValidationError("edge " + std::to_string(e) + " not covered exactly once");
  for (int slot : map.a_)
    if (slot < 0) throw InternalError("label map has unset a-slot");
  return map;
}

int LabelMap::line_vertex(int v, const FragmentLabel& l) const {
  switch (l.kind) {
    case LabelKind::A:
      return a(v, l.index);
    case LabelKind::B:
      return b(v, l.index);
    case LabelKind::C:
      if (!odd_mode_) throw ValidationError("c label used in even mode");
      return c(v);
  }
  throw InternalError("bad label kind");
}

std::vector<VertexPair> sigma_edges(const LabelMap& labels, int v, const FragmentGraph& h) {
  if (h.n() != labels.n() || h.odd_mode() != labels.odd_mode())
    throw ValidationError("fragment mode does not match the label map");
  std::vector<VertexPair> out;
  out.reserve(h.edges().size());
  for (const auto& [x, y] : h.edges()) {
    int lx = labels.line_vertex(v, decode_label(x, h.n()));
    int ly = labels.line_vertex(v, decode_label(y, h.n()));
    out.push_back(normalized(lx, ly));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace linehamd
