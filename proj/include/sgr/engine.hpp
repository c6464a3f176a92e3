#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "sgr/derivation_tree.hpp"
#include "sgr/focusing.hpp"
#include "sgr/rewrite.hpp"
#include "sgr/strategy.hpp"

namespace sgr {

using RuleSet = std::map<std::string, LocatedRule>;

struct RunLimits {
  /// Configuration steps per run, nested repeat/orelse runs included.
  std::size_t max_steps = 100000;
  std::size_t max_configuration_size = 10000;
  /// Configuration steps allowed when evaluating one if/while condition.
  std::size_t condition_max_steps = 10000;
};

struct EngineOptions {
  /// Re-validate every located graph placed into a configuration.
  bool check_invariants = false;
  /// Reject if/while conditions outside the deterministic sublanguage.
  bool strict_conditions = false;
};

/// A strategic graph program [S, G_P^Q]. It is a result when S is id or fail.
struct Program {
  StrategyPtr strategy;
  LocatedGraph state;

  bool is_result() const { return strategy->is_result(); }
};

struct Slot {
  TreeNodeId node = 0;
  Program program;
};

/// Multiset of programs, one per derivation-tree node, in creation order.
struct Configuration {
  std::vector<Slot> slots;

  bool terminal() const;
};

struct ResultSet {
  std::vector<Slot> results;
  bool complete = false;
};

ResultSet result_set(const Configuration& c);

/// Where a successor program lives in the derivation tree.
struct InPlace {};
struct NewChild {
  TreeLabel label;
};
struct AtNode {
  TreeNodeId node;
};
using Placement = std::variant<InPlace, NewChild, AtNode>;

struct Successor {
  Program program;
  Placement placement;
};

struct ProgramStep {
  std::vector<Successor> successors;
  /// Probability of this transition of the program.
  double probability = 1.0;
};

struct ConfigurationStep {
  double probability = 1.0;
  std::vector<double> program_probabilities;
};

enum class ConditionResult { Success, Failure, Diverged };

enum class RunStatus { Terminal, LimitExceeded, Diverged };

std::string_view to_string(RunStatus s);

struct RunReport {
  RunStatus status = RunStatus::Terminal;
  std::string message;
  Configuration final;
  DerivationTree tree;
  std::uint64_t seed = 0;
  std::size_t steps = 0;
  double log_probability = 0.0;
  std::vector<ConfigurationStep> trajectory;
  std::vector<std::string> warnings;
  std::size_t invariant_checks = 0;

  ResultSet results() const { return result_set(final); }
  bool has_id_result() const;
};

/// Process exit status of a run: 0 when terminal with an Id result, 1 when
/// terminal with only Fail results, 2 when a limit was hit or a condition
/// diverged. Input errors use 3.
int exit_status(const RunReport& r);

/// Executes strategic graph programs with the small-step semantics.
///
/// Randomness is derived from one root seed per run: every program step at
/// tree node n draws from a stream keyed by (seed, n, step index at n), so
/// outcomes do not depend on the order in which programs are stepped.
class Engine {
 public:
  Engine(RuleSet rules, FunctionRegistry registry, RunLimits limits = {},
         EngineOptions options = {});

  /// Runs {[S, G]} until terminal or a limit is hit. LimitExceeded and
  /// diverging conditions produce a partial report; rewrite and lookup
  /// errors propagate as exceptions.
  RunReport run(const Program& program, std::uint64_t seed) const;

  /// One transition of a non-result program living at `node`.
  ProgramStep step_program(const Program& program, DerivationTree& tree,
                           TreeNodeId node, std::uint64_t seed) const;

  /// Steps every non-result program once and places the successors in the
  /// tree. Throws LimitExceeded when the configuration grows too large.
  ConfigurationStep step_configuration(Configuration& c, DerivationTree& tree,
                                       std::uint64_t seed) const;

  /// Runs {[S, G]} on the side (no tree recording) until an Id result
  /// appears, everything failed, or the condition budget runs out.
  ConditionResult eval_condition(const StrategyPtr& s, const LocatedGraph& g,
                                 std::uint64_t seed) const;

  const RuleSet& rules() const { return rules_; }
  const FunctionRegistry& registry() const { return registry_; }
  const RunLimits& limits() const { return limits_; }
  const EngineOptions& options() const { return options_; }

  /// Number of invariant checks performed so far (all runs).
  std::size_t invariant_checks() const { return checks_; }

 private:
  friend class Runner;

  RuleSet rules_;
  FunctionRegistry registry_;
  RunLimits limits_;
  EngineOptions options_;
  mutable std::size_t checks_ = 0;
};

}  // namespace sgr
