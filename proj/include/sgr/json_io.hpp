#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgr/engine.hpp"
#include "sgr/error.hpp"
#include "sgr/focusing.hpp"

namespace sgr {

using Json = nlohmann::ordered_json;

/// One problem found while loading input files. `location` is "line:col"
/// for syntax errors and a JSON pointer for semantic ones.
struct Diagnostic {
  std::string file;
  std::string location;
  std::string message;

  std::string str() const;
};

/// Every problem found in a set of input files.
class InputError : public Error {
 public:
  explicit InputError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

// ---- serialization ----

Json value_to_json(const AttributeValue& v);
Json label_to_json(const Label& l);
Json graph_to_json(const PortGraph& g);
Json subgraph_to_json(const Subgraph& s);
/// Graph object with "position" and "banned" members.
Json located_graph_to_json(const LocatedGraph& g);
Json morphism_to_json(const Morphism& m);
Json rule_to_json(const LocatedRule& r);
Json tree_to_json(const DerivationTree& t);
/// Run summary: status, results, trajectory probabilities and warnings.
/// The tree is exported separately.
Json report_to_json(const RunReport& r);

/// Stable 8-hex-digit digest of a morphism (FNV-1a over its JSON form).
std::string morphism_digest(const Morphism& m);

// ---- parsing ----

/// Parses a graph object; problems are appended to `diags` under `pointer`.
std::optional<PortGraph> graph_from_json(const Json& j, const std::string& file,
                                         const std::string& pointer,
                                         std::vector<Diagnostic>& diags);

/// Parses text as JSON; syntax errors become a "line:col" diagnostic.
std::optional<Json> parse_json_text(const std::string& text, const std::string& file,
                                    std::vector<Diagnostic>& diags);

/// Throws InputError.
PortGraph parse_graph(const std::string& text, const std::string& file = "<graph>");

struct ProgramBundle {
  LocatedGraph graph;
  RuleSet rules;
  StrategyPtr strategy;
  FunctionRegistry registry;
  std::vector<std::string> builtins;
  std::vector<std::string> warnings;

  Program program() const { return Program{strategy, graph}; }
};

/// Loads and validates the three input texts, collecting every problem
/// before throwing InputError.
ProgramBundle load_bundle_text(const std::string& graph_text,
                               const std::string& rules_text,
                               const std::string& strategy_text,
                               const std::string& graph_file = "<graph>",
                               const std::string& rules_file = "<rules>",
                               const std::string& strategy_file = "<strategy>");

ProgramBundle load_bundle(const std::string& graph_path, const std::string& rules_path,
                          const std::string& strategy_path);

/// Reads a whole file; throws InputError if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace sgr
