#include <doctest.h>

#include <cmath>

#include "sgr/engine.hpp"
#include "sgr/error.hpp"
#include "support.hpp"

using namespace sgr;
using namespace sgr::testing;
using namespace sgr::make;

namespace {

RuleSet flip_rules() {
  RuleSet rules;
  rules.emplace("R", flip_rule("R"));
  return rules;
}

Engine flip_engine(RunLimits limits = {}, EngineOptions options = {}) {
  return Engine(flip_rules(), FunctionRegistry::with_builtins(), limits, options);
}

LocatedGraph located(PortGraph g) { return LocatedGraph(share(std::move(g))); }

std::size_t count_true(const PortGraph& g) {
  std::size_t n = 0;
  for (const auto& [id, node] : g.nodes()) n += node.attrs.at("state") == AttributeValue{true};
  return n;
}

std::size_t count_status(const ResultSet& rs, bool id_result) {
  std::size_t n = 0;
  for (const auto& s : rs.results) n += s.program.strategy->is_id() == id_result;
  return n;
}

StrategyPtr parse(std::string_view text) {
  return parse_strategy(text, {"R", "flip", "unflip", "grow", "del", "bypass", "relabel", "flipW"});
}

}  // namespace

TEST_CASE("all(R) branches once per legal match") {
  Engine e = flip_engine({}, {true, false});
  RunReport r = e.run(Program{all("R"), located(state_graph(3, {{0, 1}, {1, 2}}))}, 0);
  CHECK(r.status == RunStatus::Terminal);
  ResultSet rs = r.results();
  CHECK(rs.complete);
  REQUIRE(rs.results.size() == 3);
  CHECK(count_status(rs, true) == 3);
  CHECK(r.tree.size() == 4);
  CHECK(r.tree.node(0).children.size() == 3);
  for (const auto& s : rs.results) {
    CHECK(count_true(s.program.state.g()) == 1);
    const auto& label = r.tree.node(s.node).label;
    REQUIRE(label);
    CHECK(std::get<RewriteLabel>(*label).rule == "R");
  }
  CHECK(r.log_probability == 0.0);
  CHECK(r.invariant_checks > 0);
}

TEST_CASE("all(R) without a match fails in place") {
  Engine e = flip_engine();
  LocatedGraph g = located(graph({node(0, "B", {"p"})}));
  RunReport r = e.run(Program{all("R"), g}, 0);
  REQUIRE(r.results().results.size() == 1);
  CHECK(r.results().results[0].program.strategy->is_fail());
  CHECK(r.tree.size() == 1);
  CHECK(r.tree.node(0).status == NodeStatus::FailResult);
  CHECK_FALSE(r.has_id_result());
}

TEST_CASE("one(R) picks a match with probability 1/n") {
  Engine e = flip_engine();
  DerivationTree tree;
  LocatedGraph g = located(state_graph(4, {}));
  TreeNodeId root = tree.add_root(g);
  ProgramStep step = e.step_program(Program{one("R"), g}, tree, root, 7);
  REQUIRE(step.successors.size() == 1);
  CHECK(step.probability == doctest::Approx(0.25));
  CHECK(step.successors[0].program.strategy->is_id());
  CHECK(std::holds_alternative<NewChild>(step.successors[0].placement));
  CHECK(count_true(step.successors[0].program.state.g()) == 1);
}

TEST_CASE("configuration step multiplies program probabilities") {
  Engine e = flip_engine();
  DerivationTree tree;
  Configuration c;
  for (int i = 0; i < 2; ++i) {
    LocatedGraph g = located(state_graph(2, {{0, 1}}));
    c.slots.push_back(Slot{tree.add_root(g), Program{one("R"), g}});
  }
  ConfigurationStep step = e.step_configuration(c, tree, 3);
  CHECK(step.probability == doctest::Approx(0.25));
  CHECK(step.program_probabilities.size() == 2);
  CHECK(c.terminal());
  CHECK(c.slots.size() == 2);
}

TEST_CASE("sequencing unfolds results") {
  Engine e = flip_engine();
  DerivationTree tree;
  LocatedGraph g = located(state_graph(2, {}));
  TreeNodeId root = tree.add_root(g);
  ProgramStep s1 = e.step_program(Program{seq(id(), all("R")), g}, tree, root, 0);
  REQUIRE(s1.successors.size() == 1);
  CHECK(*s1.successors[0].program.strategy == *all("R"));
  CHECK(std::holds_alternative<InPlace>(s1.successors[0].placement));
  ProgramStep s2 = e.step_program(Program{seq(fail(), all("R")), g}, tree, root, 0);
  REQUIRE(s2.successors.size() == 1);
  CHECK(s2.successors[0].program.strategy->is_fail());
  ProgramStep s3 = e.step_program(Program{seq(all("R"), id()), g}, tree, root, 0);
  REQUIRE(s3.successors.size() == 2);
  for (const auto& succ : s3.successors) CHECK(*succ.program.strategy == *seq(id(), id()));
}

TEST_CASE("result strategies cannot step") {
  Engine e = flip_engine();
  DerivationTree tree;
  LocatedGraph g = located(state_graph(1, {}));
  TreeNodeId root = tree.add_root(g);
  try {
    e.step_program(Program{id(), g}, tree, root, 0);
    FAIL("expected Stuck");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::Stuck);
  }
}

TEST_CASE("isEmpty, setPos and setBan") {
  Engine e = flip_engine();
  LocatedGraph g = located(state_graph(3, {{0, 1}}));
  auto outcome = [&](StrategyPtr s) {
    RunReport r = e.run(Program{s, g}, 0);
    REQUIRE(r.results().results.size() == 1);
    return r.results().results[0];
  };
  CHECK(outcome(is_empty(empty_set())).program.strategy->is_id());
  CHECK(outcome(is_empty(crt_graph())).program.strategy->is_fail());
  Slot p = outcome(set_pos(empty_set()));
  CHECK(p.program.strategy->is_id());
  CHECK(p.program.state.position.empty());
  Slot q = outcome(set_ban(crt_graph()));
  CHECK(q.program.state.banned == Subgraph::whole(q.program.state.graph));
  // With everything banned, all(R) has no legal match.
  RunReport r = e.run(Program{seq(set_ban(crt_graph()), all("R")), g}, 0);
  CHECK_FALSE(r.has_id_result());
}

TEST_CASE("eval_condition") {
  Engine e = flip_engine({100000, 10000, 50});
  LocatedGraph g = located(state_graph(2, {{0, 1}}));
  CHECK(e.eval_condition(id(), g, 0) == ConditionResult::Success);
  CHECK(e.eval_condition(fail(), g, 0) == ConditionResult::Failure);
  CHECK(e.eval_condition(all("R"), g, 0) == ConditionResult::Success);
  CHECK(e.eval_condition(seq(all("R"), all("R")), g, 0) == ConditionResult::Success);
  CHECK(e.eval_condition(seq(all("R"), seq(all("R"), all("R"))), g, 0) == ConditionResult::Failure);
  CHECK(e.eval_condition(while_do(id(), id()), g, 0) == ConditionResult::Diverged);
}

TEST_CASE("if dispatches on the condition without applying it") {
  Engine e = flip_engine();
  LocatedGraph g = located(state_graph(2, {{0, 1}}));
  RunReport r = e.run(Program{if_then_else(all("R"), id(), fail()), g}, 0);
  REQUIRE(r.results().results.size() == 1);
  const Slot s = r.results().results[0];
  CHECK(s.program.strategy->is_id());
  CHECK(count_true(s.program.state.g()) == 0);
  REQUIRE(r.tree.node(s.node).label);
  CHECK(std::get<ControlLabel>(*r.tree.node(s.node).label).construct == "then");

  RunReport n = e.run(Program{not_(all("R")), g}, 0);
  REQUIRE(n.results().results.size() == 1);
  CHECK(n.results().results[0].program.strategy->is_fail());
}

TEST_CASE("a diverging condition stops the run") {
  Engine e = flip_engine({1000, 1000, 20});
  LocatedGraph g = located(state_graph(1, {}));
  RunReport r = e.run(Program{if_then_else(while_do(id(), id()), id(), id()), g}, 0);
  CHECK(r.status == RunStatus::Diverged);
  CHECK_FALSE(r.message.empty());
}

TEST_CASE("while loops to a fixpoint") {
  Engine e = flip_engine();
  LocatedGraph g = located(state_graph(4, {{0, 1}, {1, 2}, {2, 3}}));
  RunReport r = e.run(Program{while_do(all("R"), one("R")), g}, 11);
  CHECK(r.status == RunStatus::Terminal);
  REQUIRE(r.results().results.size() == 1);
  const Slot s = r.results().results[0];
  CHECK(s.program.strategy->is_id());
  CHECK(count_true(s.program.state.g()) == 4);
  CHECK(r.log_probability == doctest::Approx(std::log(1.0 / 24.0)));
}

TEST_CASE("repeat applies until failure and never fails itself") {
  Engine e = flip_engine();
  RunReport r = e.run(Program{repeat(one("R")), located(state_graph(3, {{0, 1}}))}, 2);
  REQUIRE(r.results().results.size() == 1);
  CHECK(r.results().results[0].program.strategy->is_id());
  CHECK(count_true(r.results().results[0].program.state.g()) == 3);

  LocatedGraph none = located(graph({node(0, "B", {})}));
  RunReport z = e.run(Program{repeat(all("R")), none}, 0);
  REQUIRE(z.results().results.size() == 1);
  CHECK(z.results().results[0].program.strategy->is_id());
  CHECK(z.results().results[0].program.state.g() == none.g());

  // repeat(all(R)) explores every order: 2 nodes give 2 leaves.
  RunReport a = e.run(Program{repeat(all("R")), located(state_graph(2, {}))}, 0);
  CHECK(count_status(a.results(), true) == 2);
  for (const auto& s : a.results().results) CHECK(count_true(s.program.state.g()) == 2);
}

TEST_CASE("orelse takes the second branch only when the first fails") {
  Engine e = flip_engine();
  LocatedGraph some = located(state_graph(2, {}));
  RunReport r = e.run(Program{or_else(all("R"), fail()), some}, 0);
  CHECK(count_status(r.results(), true) == 2);
  LocatedGraph none = located(graph({node(0, "B", {})}));
  RunReport z = e.run(Program{or_else(all("R"), id()), none}, 0);
  REQUIRE(z.results().results.size() == 1);
  CHECK(z.results().results[0].program.strategy->is_id());
  RunReport f = e.run(Program{or_else(all("R"), fail()), none}, 0);
  CHECK_FALSE(f.has_id_result());
}

TEST_CASE("ppick never takes a zero-weight branch") {
  Engine e = flip_engine();
  LocatedGraph g = located(state_graph(1, {}));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RunReport r = e.run(Program{ppick({{fail(), 0.0}, {id(), 1.0}, {fail(), 0.0}}), g}, seed);
    CHECK(r.has_id_result());
  }
}

TEST_CASE("result_set") {
  LocatedGraph g = located(state_graph(1, {}));
  Configuration open{{Slot{0, Program{id(), g}}, Slot{1, Program{all("R"), g}}}};
  ResultSet a = result_set(open);
  CHECK_FALSE(a.complete);
  CHECK(a.results.size() == 1);
  Configuration done{{Slot{0, Program{id(), g}}, Slot{1, Program{fail(), g}}}};
  ResultSet b = result_set(done);
  CHECK(b.complete);
  CHECK(b.results.size() == 2);
  CHECK(result_set(Configuration{}).complete);
}

TEST_CASE("step limit produces a partial report") {
  RuleSet rules = fuzz_rules();
  Engine e(rules, fuzz_registry(), {25, 10000, 100});
  LocatedGraph g = located(graph({node(0, "A", {"p"}, {{"state", false}})}));
  RunReport r = e.run(Program{repeat(one("grow")), g}, 0);
  CHECK(r.status == RunStatus::LimitExceeded);
  CHECK(r.steps == 25);
  CHECK_FALSE(r.message.empty());
}

TEST_CASE("configuration size limit") {
  Engine e = flip_engine({1000, 3, 100});
  RunReport r = e.run(Program{all("R"), located(state_graph(5, {}))}, 0);
  CHECK(r.status == RunStatus::LimitExceeded);
}

TEST_CASE("strict mode rejects non-deterministic conditions") {
  Engine e = flip_engine({}, {false, true});
  LocatedGraph g = located(state_graph(1, {}));
  CHECK_THROWS_AS(e.run(Program{if_then_else(one("R"), id(), id()), g}, 0), Error);
  Engine lax = flip_engine();
  RunReport r = lax.run(Program{if_then_else(one("R"), id(), id()), g}, 0);
  CHECK(r.warnings.size() == 1);
}

TEST_CASE("spanning tree on the 4-cycle") {
  ProgramBundle b = load_corpus("spanning_tree", "cycle4.json", "spanning_tree.sgy");
  Engine e(b.rules, b.registry, {}, {true, false});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RunReport r = e.run(b.program(), seed);
    CHECK(r.status == RunStatus::Terminal);
    REQUIRE(r.results().results.size() == 1);
    const Slot result = r.results().results[0];
    const PortGraph& g = result.program.state.g();
    std::vector<std::pair<int, int>> marked;
    for (const auto& [id, edge] : g.edges())
      if (edge.attrs.at("intree") == AttributeValue{true})
        marked.emplace_back(static_cast<int>(std::get<std::int64_t>(g.node(edge.from.node).attrs.at("key"))),
                            static_cast<int>(std::get<std::int64_t>(g.node(edge.to.node).attrs.at("key"))));
    CHECK(is_spanning_tree(4, marked));
  }
}

TEST_CASE("one(R) lands inside the outcomes of all(R)") {
  Rng rng(8080);
  RuleSet rules = fuzz_rules();
  Engine e(rules, fuzz_registry());
  for (int round = 0; round < 100; ++round) {
    LocatedGraph g = random_fuzz_graph(rng);
    for (const auto& [name, r] : rules) {
      RunReport every = e.run(Program{all(name), g}, 0);
      std::set<std::string> outcomes;
      for (const auto& s : every.results().results)
        if (s.program.strategy->is_id())
          outcomes.insert(located_graph_to_json(s.program.state).dump());
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        RunReport single = e.run(Program{one(name), g}, seed);
        REQUIRE(single.results().results.size() == 1);
        const Slot s = single.results().results[0];
        if (s.program.strategy->is_id())
          CHECK(outcomes.count(located_graph_to_json(s.program.state).dump()) == 1);
        else
          CHECK(outcomes.empty());
      }
    }
  }
}

TEST_CASE("fuzzed programs always make progress and end in results") {
  Rng rng(1717);
  RuleSet rules = fuzz_rules();
  Engine e(rules, fuzz_registry(), {300, 300, 60}, {true, false});
  for (int round = 0; round < 150; ++round) {
    LocatedGraph g = random_fuzz_graph(rng);
    StrategyPtr s = random_strategy(rng, FuzzOptions{});
    RunReport r;
    REQUIRE_NOTHROW(r = e.run(Program{s, g}, round));
    if (r.status == RunStatus::Terminal) {
      CHECK(r.final.terminal());
      for (const auto& slot : r.final.slots) {
        const auto& node = r.tree.node(slot.node);
        CHECK(node.status == (slot.program.strategy->is_id() ? NodeStatus::IdResult
                                                              : NodeStatus::FailResult));
        CHECK(well_formed(slot.program.state).empty());
      }
    }
    double logp = 0;
    for (const auto& step : r.trajectory) logp += std::log(step.probability);
    CHECK(r.log_probability == doctest::Approx(logp));
  }
}

TEST_CASE("first_level_ancestor") {
  DerivationTree t;
  LocatedGraph g = located(state_graph(1, {}));
  TreeNodeId root = t.add_root(g);
  TreeNodeId a = t.add_child(root, g, ControlLabel{"then"});
  TreeNodeId b = t.add_child(a, g, ControlLabel{"else"});
  CHECK_FALSE(t.first_level_ancestor(root));
  CHECK(t.first_level_ancestor(a) == a);
  CHECK(t.first_level_ancestor(b) == a);
  CHECK(t.next_step(b) == 0);
  CHECK(t.next_step(b) == 1);
}

TEST_CASE("parsed and built programs behave the same") {
  Engine e = flip_engine();
  LocatedGraph g = located(state_graph(3, {{0, 1}, {1, 2}}));
  StrategyPtr text = parse("setPos(property((Node, state == false), CrtGraph)); all(R); not(all(R))");
  RunReport r = e.run(Program{text, g}, 0);
  CHECK(count_status(r.results(), true) == 0);
  CHECK(count_status(r.results(), false) == 3);
}
