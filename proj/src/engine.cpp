#include "sgr/engine.hpp"

#include <cmath>
#include <utility>

#include "sgr/error.hpp"
#include "sgr/random.hpp"

namespace sgr {

// ---- derivation tree ----

std::string_view to_string(NodeStatus s) {
  switch (s) {
    case NodeStatus::Open: return "open";
    case NodeStatus::IdResult: return "id";
    case NodeStatus::FailResult: return "fail";
  }
  return "?";
}

TreeNodeId DerivationTree::add_root(LocatedGraph state) {
  Node n;
  n.id = nodes_.size();
  n.state = std::move(state);
  nodes_.push_back(std::move(n));
  return nodes_.back().id;
}

TreeNodeId DerivationTree::add_child(TreeNodeId parent, LocatedGraph state,
                                     TreeLabel label) {
  Node n;
  n.id = nodes_.size();
  n.parent = parent;
  n.label = std::move(label);
  n.state = std::move(state);
  nodes_.at(parent).children.push_back(n.id);
  nodes_.push_back(std::move(n));
  return nodes_.back().id;
}

void DerivationTree::update(TreeNodeId id, LocatedGraph state, NodeStatus status) {
  Node& n = nodes_.at(id);
  n.state = std::move(state);
  n.status = status;
}

std::optional<TreeNodeId> DerivationTree::first_level_ancestor(TreeNodeId id) const {
  if (!nodes_.at(id).parent) return std::nullopt;
  while (nodes_.at(id).parent && nodes_.at(*nodes_.at(id).parent).parent)
    id = *nodes_.at(id).parent;
  return id;
}

// ---- configurations ----

bool Configuration::terminal() const {
  for (const auto& s : slots)
    if (!s.program.is_result()) return false;
  return true;
}

ResultSet result_set(const Configuration& c) {
  ResultSet r;
  r.complete = c.terminal();
  for (const auto& s : c.slots)
    if (s.program.is_result()) r.results.push_back(s);
  return r;
}

std::string_view to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Terminal: return "terminal";
    case RunStatus::LimitExceeded: return "limit-exceeded";
    case RunStatus::Diverged: return "diverged";
  }
  return "?";
}

bool RunReport::has_id_result() const {
  for (const auto& s : final.slots)
    if (s.program.strategy->is_id()) return true;
  return false;
}

int exit_status(const RunReport& r) {
  if (r.status != RunStatus::Terminal) return 2;
  return r.has_id_result() ? 0 : 1;
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

NodeStatus status_of(const Program& p) {
  if (p.strategy->is_id()) return NodeStatus::IdResult;
  if (p.strategy->is_fail()) return NodeStatus::FailResult;
  return NodeStatus::Open;
}

Successor in_place(StrategyPtr s, LocatedGraph g) {
  return {Program{std::move(s), std::move(g)}, InPlace{}};
}

struct SubRun {
  std::vector<Slot> results;
  double probability = 1.0;
};

}  // namespace

/// State of one run (or one condition evaluation): the tree being grown, the
/// root seed and the shared step budget.
class Runner {
 public:
  Runner(const Engine& engine, DerivationTree& tree, std::uint64_t seed,
         std::size_t max_steps)
      : engine_(engine), tree_(tree), seed_(seed), max_steps_(max_steps) {}

  std::size_t steps() const { return steps_; }

  ProgramStep step(const Program& p, TreeNodeId node, Rng& rng);

  ConfigurationStep step_configuration(Configuration& c) {
    if (steps_ >= max_steps_)
      throw Error(Errc::LimitExceeded,
                  "step limit of " + std::to_string(max_steps_) + " reached");
    ++steps_;
    ConfigurationStep out;
    std::vector<Slot> next;
    for (const Slot& slot : c.slots) {
      if (slot.program.is_result()) {
        next.push_back(slot);
        continue;
      }
      Rng rng(derive_seed(seed_, {slot.node, tree_.next_step(slot.node)}));
      ProgramStep ps = step(slot.program, slot.node, rng);
      if (ps.successors.empty())
        throw Error(Errc::Stuck, "program at tree node " + std::to_string(slot.node) +
                                     " has no successor");
      out.probability *= ps.probability;
      out.program_probabilities.push_back(ps.probability);
      for (Successor& s : ps.successors) next.push_back(place(slot.node, std::move(s)));
    }
    if (next.size() > engine_.limits_.max_configuration_size)
      throw Error(Errc::LimitExceeded,
                  "configuration size " + std::to_string(next.size()) +
                      " exceeds limit " +
                      std::to_string(engine_.limits_.max_configuration_size));
    c.slots = std::move(next);
    return out;
  }

  /// Runs `p` from `node` to a terminal configuration inside the same tree.
  SubRun run_nested(const Program& p, TreeNodeId node) {
    Configuration c{{Slot{node, p}}};
    SubRun out;
    while (!c.terminal()) out.probability *= step_configuration(c).probability;
    for (auto& s : c.slots)
      if (s.program.strategy->is_id()) out.results.push_back(std::move(s));
    return out;
  }

 private:
  Slot place(TreeNodeId origin, Successor s) {
    TreeNodeId node = std::visit(
        overloaded{
            [&](const InPlace&) { return origin; },
            [&](const AtNode& a) { return a.node; },
            [&](NewChild& c) {
              return tree_.add_child(origin, s.program.state, std::move(c.label));
            },
        },
        s.placement);
    if (engine_.options_.check_invariants) {
      ++engine_.checks_;
      auto problems = s.program.state.validate();
      if (!problems.empty())
        throw Error(Errc::InvariantViolation,
                    "tree node " + std::to_string(node) + ": " + problems.front());
    }
    tree_.update(node, s.program.state, status_of(s.program));
    return Slot{node, std::move(s.program)};
  }

  const LocatedRule& rule(const std::string& name) const {
    auto it = engine_.rules_.find(name);
    if (it == engine_.rules_.end())
      throw Error(Errc::UnknownRule, "unknown rule '" + name + "'");
    return it->second;
  }

  const Engine& engine_;
  DerivationTree& tree_;
  std::uint64_t seed_;
  std::size_t max_steps_;
  std::size_t steps_ = 0;
};

ProgramStep Runner::step(const Program& p, TreeNodeId node, Rng& rng) {
  using namespace strat;
  const LocatedGraph& g = p.state;
  ProgramStep out;
  std::visit(
      overloaded{
          [&](const Id&) {
            throw Error(Errc::Stuck, "id has no transition");
          },
          [&](const Fail&) {
            throw Error(Errc::Stuck, "fail has no transition");
          },
          [&](const All& x) {
            LegalSet ls = legal_reducts(rule(x.rule), g);
            if (ls.empty()) {
              out.successors.push_back(in_place(make::fail(), g));
              return;
            }
            for (auto& r : ls)
              out.successors.push_back(
                  {Program{make::id(), std::move(r.reduct)},
                   NewChild{RewriteLabel{x.rule, std::move(r.morphism)}}});
          },
          [&](const One& x) {
            const LocatedRule& r = rule(x.rule);
            auto ms = legal_morphisms(r, g);
            if (ms.empty()) {
              out.successors.push_back(in_place(make::fail(), g));
              return;
            }
            const Morphism& m = ms[uniform_index(rng, ms.size())];
            out.probability = 1.0 / static_cast<double>(ms.size());
            out.successors.push_back({Program{make::id(), apply_at(r, g, m)},
                                      NewChild{RewriteLabel{x.rule, m}}});
          },
          [&](const Seq& x) {
            if (x.first->is_id()) {
              out.successors.push_back(in_place(x.second, g));
              return;
            }
            if (x.first->is_fail()) {
              out.successors.push_back(in_place(make::fail(), g));
              return;
            }
            out = step(Program{x.first, g}, node, rng);
            for (auto& s : out.successors)
              s.program.strategy = make::seq(s.program.strategy, x.second);
          },
          [&](const While& x) {
            out.successors.push_back(in_place(
                make::if_then_else(x.cond, make::seq(x.body, p.strategy), make::id()),
                g));
          },
          [&](const If& x) {
            switch (engine_.eval_condition(x.cond, g, rng())) {
              case ConditionResult::Success:
                out.successors.push_back(
                    {Program{x.then_branch, g}, NewChild{ControlLabel{"then"}}});
                return;
              case ConditionResult::Failure:
                out.successors.push_back(
                    {Program{x.else_branch, g}, NewChild{ControlLabel{"else"}}});
                return;
              case ConditionResult::Diverged:
                throw Error(Errc::Diverged, "condition '" + print_strategy(*x.cond) +
                                                "' diverged at tree node " +
                                                std::to_string(node));
            }
          },
          [&](const OrElse& x) {
            SubRun sub = run_nested(Program{x.first, g}, node);
            out.probability = sub.probability;
            if (sub.results.empty()) {
              out.successors.push_back({Program{x.second, g}, AtNode{node}});
              return;
            }
            for (auto& s : sub.results)
              out.successors.push_back({std::move(s.program), AtNode{s.node}});
          },
          [&](const Repeat& x) {
            SubRun sub = run_nested(Program{x.body, g}, node);
            out.probability = sub.probability;
            if (sub.results.empty()) {
              out.successors.push_back({Program{make::id(), g}, AtNode{node}});
              return;
            }
            for (auto& s : sub.results)
              out.successors.push_back(
                  {Program{p.strategy, std::move(s.program.state)}, AtNode{s.node}});
          },
          [&](const PPick& x) {
            const double u = uniform_unit(rng);
            double acc = 0.0;
            std::size_t pick = x.branches.size() - 1;
            for (std::size_t i = 0; i < x.branches.size(); ++i) {
              acc += x.branches[i].second;
              if (u < acc) {
                pick = i;
                break;
              }
            }
            // Zero-weight branches are never chosen, even at the rounding edge.
            while (pick > 0 && x.branches[pick].second == 0.0) --pick;
            out.probability = x.branches[pick].second;
            out.successors.push_back(in_place(x.branches[pick].first, g));
          },
          [&](const SetPos& x) {
            Subgraph pos = eval_focus(*x.focus, g, engine_.registry_, rng);
            out.successors.push_back(
                in_place(make::id(), LocatedGraph(g.graph, std::move(pos), g.banned)));
          },
          [&](const SetBan& x) {
            Subgraph ban = eval_focus(*x.focus, g, engine_.registry_, rng);
            out.successors.push_back(
                in_place(make::id(), LocatedGraph(g.graph, g.position, std::move(ban))));
          },
          [&](const IsEmpty& x) {
            bool empty = eval_focus(*x.focus, g, engine_.registry_, rng).empty();
            out.successors.push_back(in_place(empty ? make::id() : make::fail(), g));
          },
      },
      p.strategy->node);
  return out;
}

// ---- engine ----

Engine::Engine(RuleSet rules, FunctionRegistry registry, RunLimits limits,
               EngineOptions options)
    : rules_(std::move(rules)),
      registry_(std::move(registry)),
      limits_(limits),
      options_(options) {}

ProgramStep Engine::step_program(const Program& program, DerivationTree& tree,
                                 TreeNodeId node, std::uint64_t seed) const {
  Runner runner(*this, tree, seed, limits_.max_steps);
  Rng rng(derive_seed(seed, {node, tree.next_step(node)}));
  return runner.step(program, node, rng);
}

ConfigurationStep Engine::step_configuration(Configuration& c, DerivationTree& tree,
                                             std::uint64_t seed) const {
  Runner runner(*this, tree, seed, limits_.max_steps);
  return runner.step_configuration(c);
}

ConditionResult Engine::eval_condition(const StrategyPtr& s, const LocatedGraph& g,
                                       std::uint64_t seed) const {
  DerivationTree scratch;
  TreeNodeId root = scratch.add_root(g);
  Runner runner(*this, scratch, seed, limits_.condition_max_steps);
  Configuration c{{Slot{root, Program{s, g}}}};
  try {
    for (;;) {
      bool any_open = false;
      for (const auto& slot : c.slots) {
        if (slot.program.strategy->is_id()) return ConditionResult::Success;
        if (!slot.program.is_result()) any_open = true;
      }
      if (!any_open) return ConditionResult::Failure;
      runner.step_configuration(c);
    }
  } catch (const Error& e) {
    if (e.code() == Errc::LimitExceeded || e.code() == Errc::Diverged)
      return ConditionResult::Diverged;
    throw;
  }
}

RunReport Engine::run(const Program& program, std::uint64_t seed) const {
  RunReport report;
  report.seed = seed;
  report.warnings = condition_warnings(*program.strategy);
  if (options_.strict_conditions && !report.warnings.empty())
    throw Error(Errc::InputError, report.warnings.front());

  const std::size_t checks_before = checks_;
  TreeNodeId root = report.tree.add_root(program.state);
  report.tree.update(root, program.state, status_of(program));
  report.final.slots.push_back(Slot{root, program});

  Runner runner(*this, report.tree, seed, limits_.max_steps);
  try {
    while (!report.final.terminal()) {
      ConfigurationStep st = runner.step_configuration(report.final);
      report.log_probability += std::log(st.probability);
      report.trajectory.push_back(std::move(st));
    }
  } catch (const Error& e) {
    if (e.code() == Errc::LimitExceeded)
      report.status = RunStatus::LimitExceeded;
    else if (e.code() == Errc::Diverged)
      report.status = RunStatus::Diverged;
    else
      throw;
    report.message = e.what();
  }
  report.steps = runner.steps();
  report.invariant_checks = checks_ - checks_before;
  return report;
}

}  // namespace sgr
