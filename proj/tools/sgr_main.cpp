// Command-line front end: run, validate and match.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sgr/engine.hpp"
#include "sgr/export.hpp"
#include "sgr/json_io.hpp"

namespace fs = std::filesystem;
using namespace sgr;

namespace {

constexpr int kInput = 3;

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::InputError, "cannot write " + path.string());
  out << text;
}

void print_diagnostics(const Error& e) {
  if (const auto* in = dynamic_cast<const InputError*>(&e)) {
    for (const auto& d : in->diagnostics()) std::cerr << "error: " << d.str() << "\n";
  } else {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
  }
}

struct RunArgs {
  std::string graph, rules, strategy, out;
  std::optional<std::uint64_t> seed;
  std::size_t max_steps = RunLimits{}.max_steps;
  std::size_t max_config = RunLimits{}.max_configuration_size;
  std::size_t cond_steps = RunLimits{}.condition_max_steps;
  std::vector<std::string> exports;
  bool strict = false;
  bool check = false;
};

std::uint64_t resolve_seed(const RunArgs& a) {
  if (a.seed) return *a.seed;
  if (const char* env = std::getenv("SGR_SEED")) {
    try {
      std::size_t used = 0;
      std::uint64_t v = std::stoull(env, &used);
      if (used == std::string_view(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(Errc::InputError, std::string("SGR_SEED is not an unsigned integer: ") + env);
  }
  return 0;
}

int cmd_run(const RunArgs& a) {
  std::vector<GraphFormat> formats;
  for (const auto& f : a.exports) {
    auto fmt = parse_graph_format(f);
    if (!fmt) throw Error(Errc::InputError, "unknown export format '" + f + "'");
    formats.push_back(*fmt);
  }
  const std::uint64_t seed = resolve_seed(a);
  ProgramBundle b = load_bundle(a.graph, a.rules, a.strategy);
  for (const auto& w : b.warnings) std::cerr << "warning: " << w << "\n";

  RunLimits limits{a.max_steps, a.max_config, a.cond_steps};
  Engine engine(b.rules, b.registry, limits, {a.check, a.strict});
  RunReport report = engine.run(b.program(), seed);
  const ResultSet rs = report.results();

  std::size_t ids = 0;
  for (const auto& s : rs.results)
    if (s.program.strategy->is_id()) ++ids;
  std::cout << "status: " << to_string(report.status) << "\n"
            << "seed: " << seed << "\n"
            << "steps: " << report.steps << "\n"
            << "id results: " << ids << "\n"
            << "fail results: " << rs.results.size() - ids << "\n"
            << "tree nodes: " << report.tree.size() << "\n"
            << "log probability: " << report.log_probability << "\n";
  if (!report.message.empty()) std::cerr << "error: " << report.message << "\n";

  if (!a.out.empty()) {
    fs::create_directories(a.out);
    const fs::path dir(a.out);
    write_file(dir / "report.json", report_to_json(report).dump(2) + "\n");
    write_file(dir / "tree.json", export_derivation_tree(report.tree, TreeFormat::Json));
    for (GraphFormat f : formats) {
      if (f == GraphFormat::Dot)
        write_file(dir / "tree.dot", export_derivation_tree(report.tree, TreeFormat::Dot));
      for (const auto& s : rs.results)
        if (s.program.strategy->is_id())
          write_file(dir / ("result-" + std::to_string(s.node) + "." + std::string(extension(f))),
                     export_graph(s.program.state, f));
    }
  }

  return exit_status(report);
}

int cmd_validate(const std::string& graph, const std::string& rules,
                 const std::string& strategy) {
  ProgramBundle b = load_bundle(graph, rules, strategy);
  for (const auto& w : b.warnings) std::cerr << "warning: " << w << "\n";
  std::cout << "ok: " << b.graph.g().node_count() << " nodes, " << b.graph.g().edge_count()
            << " edges, " << b.rules.size() << " rules\n"
            << "strategy: " << print_strategy(*b.strategy) << "\n";
  return 0;
}

int cmd_match(const std::string& pattern_path, const std::string& host_path) {
  PortGraph pattern = parse_graph(read_file(pattern_path), pattern_path);
  PortGraph host = parse_graph(read_file(host_path), host_path);
  auto ms = find_all_morphisms(pattern, host);
  std::cout << ms.size() << "\n";
  for (const auto& m : ms) std::cout << morphism_to_json(m).dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strategic port-graph rewriting"};
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run a strategic graph program");
  run_cmd->add_option("--graph", run.graph, "Graph JSON file")->required();
  run_cmd->add_option("--rules", run.rules, "Rules JSON file")->required();
  run_cmd->add_option("--strategy", run.strategy, "Strategy file")->required();
  run_cmd->add_option("--seed", run.seed, "Root random seed (default: $SGR_SEED, else 0)");
  run_cmd->add_option("--max-steps", run.max_steps, "Configuration step budget")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--max-config", run.max_config, "Largest configuration allowed")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--cond-steps", run.cond_steps, "Step budget per condition")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--out", run.out, "Directory for the report, tree and exports");
  run_cmd->add_option("--export", run.exports, "Result graph formats: dot, json, graphml")
      ->delimiter(',');
  run_cmd->add_flag("--strict-cond", run.strict,
                    "Reject conditions outside the deterministic fragment");
  run_cmd->add_flag("--check", run.check, "Validate every intermediate graph");

  std::string v_graph, v_rules, v_strategy;
  auto* validate_cmd = app.add_subcommand("validate", "Check a program bundle");
  validate_cmd->add_option("--graph", v_graph, "Graph JSON file")->required();
  validate_cmd->add_option("--rules", v_rules, "Rules JSON file")->required();
  validate_cmd->add_option("--strategy", v_strategy, "Strategy file")->required();

  std::string m_pattern, m_host;
  auto* match_cmd = app.add_subcommand("match", "List the morphisms of a pattern into a host");
  match_cmd->add_option("--pattern", m_pattern, "Pattern graph JSON file")->required();
  match_cmd->add_option("--host", m_host, "Host graph JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*run_cmd) return cmd_run(run);
    if (*validate_cmd) return cmd_validate(v_graph, v_rules, v_strategy);
    if (*match_cmd) return cmd_match(m_pattern, m_host);
  } catch (const Error& e) {
    print_diagnostics(e);
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
