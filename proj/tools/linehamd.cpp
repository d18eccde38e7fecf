// Command-line front end: decompose line graphs of regular graphs into
// Hamilton cycles, verify certificates, and self-check the fragment catalogs.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "linehamd/io.hpp"
#include "linehamd/repair.hpp"

namespace {

using namespace linehamd;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitInternal = 3;

void emit_error(const std::string& kind, const std::string& message) {
  Json j;
  j["error"]["kind"] = kind;
  j["error"]["message"] = message;
  std::cerr << j.dump() << "\n";
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("LINEHAMD_SEED")) return std::strtoull(env, nullptr, 10);
  return 20240901ull;
}

std::vector<int> parse_cycle_file(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<int> cycle;
  int v;
  while (in >> v) cycle.push_back(v);
  return cycle;
}

std::vector<VertexPair> parse_matching_file(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<VertexPair> out;
  int u, v;
  while (in >> u >> v) out.emplace_back(u, v);
  return out;
}

int run_decompose(const std::string& graph_path, const std::string& ham_path,
                  const std::string& matching_path, const std::string& out_path) {
  Graph g = parse_graph(read_file(graph_path));
  DecomposeOptions options;
  if (!ham_path.empty()) options.ham = parse_cycle_file(ham_path);
  if (!matching_path.empty()) options.matching = parse_matching_file(matching_path);
  Decomposition d = decompose_line_graph(g, options);
  LineGraph l(g);
  VerificationReport report = verify_decomposition(l, d);
  std::string payload = decomposition_to_json(g, d).dump(2) + "\n";
  if (out_path.empty())
    std::cout << payload;
  else
    write_file(out_path, payload);
  if (!report.pass) {
    emit_error("verification", "pipeline output failed verification: " + report.detail);
    return kExitVerifyFail;
  }
  return kExitOk;
}

int run_verify(const std::string& graph_path, const std::string& json_path) {
  Graph g = parse_graph(read_file(graph_path));
  Decomposition d = decomposition_from_json(Json::parse(read_file(json_path)), g);
  VerificationReport report = verify_decomposition(LineGraph(g), d);
  std::cout << verification_to_json(report).dump(2) << "\n";
  return report.pass ? kExitOk : kExitVerifyFail;
}

int run_catalog(int n, const std::string& mode, bool check) {
  Catalog cat = make_catalog(n, mode == "odd");
  std::cout << catalog_to_json(cat).dump(2) << "\n";
  if (check) {
    CatalogReport report = check_catalog(cat);
    std::cerr << catalog_report_to_json(report).dump(2) << "\n";
    if (!report.pass) return kExitVerifyFail;
  }
  return kExitOk;
}

// The Lemma-2 connector sets over abstract vertices 0..8:
// alpha=0 beta=1 u=2 v=3 w=4 x=5 u'=6 v'=7 w'=8.
std::vector<std::pair<std::string, std::pair<std::vector<std::vector<VertexPair>>, std::vector<int>>>>
lemma_connector_sets() {
  const int A = 0, B = 1, U = 2, V = 3, W = 4, X = 5, U2 = 6, V2 = 7, W2 = 8;
  using Sets = std::vector<std::vector<VertexPair>>;
  std::vector<std::pair<std::string, std::pair<Sets, std::vector<int>>>> out;
  out.push_back({"(0)", {Sets{{{A, U}, {U, W}, {B, W}}, {{A, W}, {B, U}, {U, V}}}, {A, B}}});
  out.push_back({"(1)", {Sets{{{A, U}, {U, V}, {B, W}}, {{A, W}, {W, V}, {B, U}}}, {A, B}}});
  out.push_back(
      {"(2)", {Sets{{{A, U}, {U, V}, {B, W}}, {{A, W}, {W, V}, {B, U}}, {{A, B}}}, {A, B}}});
  out.push_back({"(3)",
                 {Sets{{{A, U}, {U, V}, {B, W}, {W, X}},
                       {{A, W}, {B, U}},
                       {{A, B}, {V, W}, {W, U}, {U, X}}},
                  {A, B}}});
  out.push_back({"(4)",
                 {Sets{{{A, U}, {U, V}, {V, W}, {W, B}},
                       {{A, V}, {B, U}, {U, W}},
                       {{A, W}, {B, V}},
                       {{A, X}, {X, B}}},
                  {A, B}}});
  out.push_back({"(5)",
                 {Sets{{{A, X}, {V, W}, {U, B}},
                       {{A, B}, {U, V}, {W, X}},
                       {{A, U}, {U, X}, {X, B}},
                       {{A, V}, {U, W}, {W, B}},
                       {{A, W}, {X, V}, {V, B}}},
                  {A, B}}});
  out.push_back({"(6)",
                 {Sets{{{A, U}, {U, X}, {X, V}, {V, W}, {B, U2}, {U2, V2}, {V2, W2}},
                       {{A, U2}, {U2, V}, {V, W2}, {B, U}, {U, V2}, {V2, W}}},
                  {A, B}}});
  out.push_back({"(7)",
                 {Sets{{{A, U}, {U, X}, {X, V}, {V, W}, {B, U2}, {U2, V2}, {V2, W2}},
                       {{A, U2}, {U2, V}, {V, W2}, {B, U}, {U, V2}, {V2, W}},
                       {{A, X}, {X, B}, {U, V}}},
                  {A, B, U}}});
  return out;
}

int run_selfcheck(int nmax, std::uint64_t seed) {
  bool all_ok = true;
  auto stamp = [] { return std::chrono::steady_clock::now(); };
  auto secs = [](auto t0, auto t1) {
    return std::chrono::duration<double>(t1 - t0).count();
  };

  {
    auto t0 = stamp();
    Json results = Json::array();
    bool ok = true;
    for (const auto& [name, data] : lemma_connector_sets()) {
      ConnectorReport report = validate_connector(data.first, data.second);
      Json j = connector_report_to_json(report);
      j["case"] = name;
      results.push_back(std::move(j));
      ok = ok && report.all_ok;
    }
    all_ok = all_ok && ok;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " connector lemma cases (0)-(7)  ("
              << secs(t0, stamp()) << " s)\n";
    std::cerr << results.dump() << "\n";
  }

  {
    auto t0 = stamp();
    bool ok = true;
    for (int n = 1; n <= nmax; ++n)
      for (bool odd : {false, true}) {
        CatalogReport report = check_catalog(make_catalog(n, odd));
        if (!report.pass) {
          ok = false;
          std::cout << "  catalog n=" << n << " mode=" << (odd ? "odd" : "even") << " FAILED\n";
        }
      }
    all_ok = all_ok && ok;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " catalog sweep n=1.." << nmax << " both modes  ("
              << secs(t0, stamp()) << " s)\n";
  }

  {
    auto t0 = stamp();
    bool ok = true;
    std::vector<PlantedGraph> corpus;
    corpus.push_back(random_regular_hamiltonian(12, 4, seed + 1));
    corpus.push_back(random_regular_hamiltonian(15, 6, seed + 2));
    corpus.push_back(random_regular_hamiltonian(14, 5, seed + 3));
    corpus.push_back(random_regular_hamiltonian(12, 7, seed + 4));
    for (const auto& planted : corpus) {
      DecomposeOptions options;
      options.ham = planted.ham;
      options.matching = planted.matching;
      Decomposition d = decompose_line_graph(planted.graph, options);
      ok = ok && verify_decomposition(LineGraph(planted.graph), d).pass;
    }
    for (int k : {5, 6, 7, 8}) {
      Decomposition d = decompose_line_graph(complete_graph(k));
      ok = ok && verify_decomposition(LineGraph(complete_graph(k)), d).pass;
    }
    all_ok = all_ok && ok;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " randomized end-to-end corpus  ("
              << secs(t0, stamp()) << " s)\n";
  }

  return all_ok ? kExitOk : kExitVerifyFail;
}

int run_gen(const std::string& family, int vertices, int degree, const std::string& offsets_str,
            std::uint64_t seed, const std::string& out_path) {
  Graph g;
  if (family == "complete") {
    g = complete_graph(vertices);
  } else if (family == "circulant") {
    std::vector<int> offsets;
    std::istringstream in(offsets_str);
    int d;
    while (in >> d) offsets.push_back(d);
    if (offsets.empty()) throw ValidationError("circulant requires --offsets");
    g = circulant_graph(vertices, offsets);
  } else if (family == "random-regular") {
    g = random_regular_hamiltonian(vertices, degree, seed).graph;
  } else {
    throw ValidationError("unknown family: " + family);
  }
  std::string payload = render_graph(g);
  if (out_path.empty())
    std::cout << payload;
  else
    write_file(out_path, payload);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamilton decompositions of line graphs of regular graphs"};
  app.require_subcommand(1);

  std::string graph_path, ham_path, matching_path, out_path, json_path;
  auto* decompose = app.add_subcommand("decompose", "decompose L(G) and verify the result");
  decompose->add_option("graph", graph_path)->required();
  decompose->add_option("--ham", ham_path, "file with a Hamilton cycle (vertex list)");
  decompose->add_option("--matching", matching_path, "file with a perfect matching (pairs)");
  decompose->add_option("--out", out_path, "write the decomposition JSON here");

  auto* verify = app.add_subcommand("verify", "verify a decomposition certificate");
  verify->add_option("graph", graph_path)->required();
  verify->add_option("decomposition", json_path)->required();

  int n = 1;
  std::string mode = "even";
  bool check = false;
  auto* catalog = app.add_subcommand("catalog", "emit a Hamilton-fragment catalog");
  catalog->add_option("--n", n)->required();
  catalog->add_option("--mode", mode)->check(CLI::IsMember({"even", "odd"}));
  catalog->add_flag("--check", check, "run the precondition reports");

  int nmax = 30;
  std::uint64_t seed = default_seed();
  auto* selfcheck = app.add_subcommand("selfcheck", "connector, catalog and pipeline self-tests");
  selfcheck->add_option("--nmax", nmax);
  selfcheck->add_option("--seed", seed);

  std::string family = "complete", offsets;
  int vertices = 5, degree = 4;
  auto* gen = app.add_subcommand("gen", "generate test graphs");
  gen->add_option("--family", family)->check(CLI::IsMember({"complete", "circulant", "random-regular"}));
  gen->add_option("--vertices", vertices);
  gen->add_option("--degree", degree);
  gen->add_option("--offsets", offsets, "circulant offsets, space separated");
  gen->add_option("--seed", seed);
  gen->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (decompose->parsed()) return run_decompose(graph_path, ham_path, matching_path, out_path);
    if (verify->parsed()) return run_verify(graph_path, json_path);
    if (catalog->parsed()) return run_catalog(n, mode, check);
    if (selfcheck->parsed()) return run_selfcheck(nmax, seed);
    if (gen->parsed()) return run_gen(family, vertices, degree, offsets, seed, out_path);
  } catch (const PreconditionError& e) {
    emit_error("precondition", e.what());
    return kExitPrecondition;
  } catch (const ValidationError& e) {
    emit_error("validation", e.what());
    return kExitPrecondition;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return kExitInternal;
  }
  return kExitOk;
}
