#ifndef LINEHAMD_IO_HPP
#define LINEHAMD_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "linehamd/catalog.hpp"
#include "linehamd/pipeline.hpp"

namespace linehamd {

class ParseError : public ValidationError {
 public:
  ParseError(int line, const std::string& what)
      : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Text format: `p <vertices> <edges>` header, `e <u> <v>` per edge (0-indexed),
// `c ...` comments.
Graph parse_graph(std::string_view text);
std::string render_graph(const Graph& g);

using Json = nlohmann::ordered_json;

Json graph_to_json(const Graph& g);
Json decomposition_to_json(const Graph& g, const Decomposition& d);
Decomposition decomposition_from_json(const Json& j, const Graph& g);
Json verification_to_json(const VerificationReport& r);
Json catalog_to_json(const Catalog& c);
Json catalog_report_to_json(const CatalogReport& r);
Json connector_report_to_json(const ConnectorReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace linehamd

#endif
