#include "linehamd/io.hpp"

#include <fstream>
#include <sstream>

namespace linehamd {

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int vertices = -1, expected_edges = -1;
  std::vector<VertexPair> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      if (vertices >= 0) throw ParseError(line_no, "duplicate header");
      if (!(ls >> vertices >> expected_edges) || vertices < 0 || expected_edges < 0)
        throw ParseError(line_no, "malformed header, expected 'p <vertices> <edges>'");
      continue;
    }
    if (tag == "e") {
      if (vertices < 0) throw ParseError(line_no, "edge before header");
      int u, v;
      if (!(ls >> u >> v)) throw ParseError(line_no, "malformed edge line");
      edges.emplace_back(u, v);
      continue;
    }
    throw ParseError(line_no, "unknown line tag '" + tag + "'");
  }
  if (vertices < 0) throw ParseError(line_no, "missing header");
  if (static_cast<int>(edges.size()) != expected_edges)
    throw ParseError(line_no, "header promises " + std::to_string(expected_edges) + " edges, " +
                                  std::to_string(edges.size()) + " given");
  try {
    return Graph::build(vertices, edges);
  } catch (const ValidationError& err) {
    throw ParseError(line_no, err.what());
  }
}

std::string render_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
  return out.str();
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["vertices"] = g.vertex_count();
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  j["edges"] = std::move(edges);
  return j;
}

Json decomposition_to_json(const Graph& g, const Decomposition& d) {
  Json j;
  j["graph"] = graph_to_json(g);
  Json cycles = Json::array();
  for (const auto& cycle : d.cycles) cycles.push_back(cycle);
  j["cycles"] = std::move(cycles);
  return j;
}

Decomposition decomposition_from_json(const Json& j, const Graph& g) {
  if (!j.contains("cycles")) throw ValidationError("decomposition JSON lacks 'cycles'");
  if (j.contains("graph")) {
    const Json& gj = j["graph"];
    if (gj.value("vertices", -1) != g.vertex_count() ||
        static_cast<int>(gj.value("edges", Json::array()).size()) != g.edge_count())
      throw ValidationError("decomposition JSON does not match the graph");
  }
  Decomposition d;
  for (const auto& cycle : j["cycles"]) d.cycles.push_back(cycle.get<std::vector<int>>());
  return d;
}

Json verification_to_json(const VerificationReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["regularity"] = r.regularity;
  j["connectivity"] = r.connectivity;
  j["partition"] = r.partition;
  j["cycle_count"] = r.cycle_count;
  j["cycle_length"] = r.cycle_length;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

namespace {

std::string recipe_kind_name(const Recipe& recipe) {
  struct Visitor {
    std::string operator()(const EvenMultiRecipe&) const { return "even_multi"; }
    std::string operator()(const EvenSwapRecipe&) const { return "even_swap"; }
    std::string operator()(const EvenEasyRecipe&) const { return "even_easy"; }
    std::string operator()(const EvenCCRecipe&) const { return "even_cc"; }
    std::string operator()(const OddCCRecipe&) const { return "odd_cc"; }
    std::string operator()(const OddBigRecipe&) const { return "odd_big"; }
    std::string operator()(const FourDecompRecipe&) const { return "four_decomp"; }
    std::string operator()(const DirectRecipe&) const { return "direct"; }
  };
  return std::visit(Visitor{}, recipe);
}

Json fragment_edges_json(const FragmentGraph& f) {
  Json edges = Json::array();
  for (const auto& [x, y] : f.edges())
    edges.push_back(Json::array({label_name(x, f.n()), label_name(y, f.n())}));
  return edges;
}

}  // namespace

Json catalog_to_json(const Catalog& c) {
  Json j;
  j["n"] = c.n;
  j["mode"] = c.odd_mode ? "odd" : "even";
  j["complete_edges"] = c.complete_edge_count();
  Json plans = Json::array();
  for (const auto& plan : c.plans) {
    Json pj;
    pj["name"] = plan.name;
    pj["recipe"] = recipe_kind_name(plan.recipe);
    pj["factors"] = plan.factor_count();
    pj["edge_count"] = plan.fragment.edge_count();
    pj["edges"] = fragment_edges_json(plan.fragment);
    plans.push_back(std::move(pj));
  }
  j["plans"] = std::move(plans);
  return j;
}

Json catalog_report_to_json(const CatalogReport& r) {
  Json j;
  j["pass"] = r.pass;
  Json globals = Json::array();
  for (const auto& c : r.global_checks) {
    Json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    if (!c.pass) cj["detail"] = c.detail;
    globals.push_back(std::move(cj));
  }
  j["global_checks"] = std::move(globals);
  Json plans = Json::array();
  for (const auto& pr : r.plan_reports) {
    Json pj;
    pj["plan"] = pr.plan_name;
    pj["pass"] = pr.all_pass();
    Json checks = Json::array();
    for (const auto& c : pr.checks) {
      Json cj;
      cj["name"] = c.name;
      cj["pass"] = c.pass;
      if (!c.pass) cj["detail"] = c.detail;
      checks.push_back(std::move(cj));
    }
    pj["checks"] = std::move(checks);
    plans.push_back(std::move(pj));
  }
  j["plans"] = std::move(plans);
  return j;
}

Json connector_report_to_json(const ConnectorReport& r) {
  Json j;
  j["pass"] = r.all_ok;
  j["patterns_checked"] = r.patterns_checked;
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json fj = Json::array();
    for (const auto& joins : f.joins) {
      Json jj = Json::array();
      for (const auto& [u, v] : joins) jj.push_back(Json::array({u, v}));
      fj.push_back(std::move(jj));
    }
    failures.push_back(std::move(fj));
  }
  j["failures"] = std::move(failures);
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write file: " + path);
  out << contents;
}

}  // namespace linehamd
