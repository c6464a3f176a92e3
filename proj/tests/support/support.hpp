#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sgr/engine.hpp"
#include "sgr/json_io.hpp"

namespace sgr::testing {

// ---- builders ----

NodeSpec node(std::uint64_t id, Label name, std::vector<std::string> ports,
              Attributes attrs = {});
EdgeSpec edge(std::uint64_t id, std::uint64_t a, std::string pa, std::uint64_t b,
              std::string pb, Label label = std::string("e"), Attributes attrs = {});
PortGraph graph(std::vector<NodeSpec> nodes, std::vector<EdgeSpec> edges = {});
inline Variable var(std::string name) { return Variable{std::move(name)}; }

LocatedRule rule(std::string name, PortGraph lhs, PortGraph rhs,
                 std::vector<ArrowPort> arrow);
ArrowPort bridge(std::vector<PortRef> lhs, std::vector<PortRef> rhs);
ArrowPort blackhole(std::vector<PortRef> lhs);
ArrowPort wire(PortRef a, PortRef b);
inline PortRef at(std::uint64_t node, std::string port) {
  return PortRef{NodeId{node}, Label{std::move(port)}};
}

/// Rule flipping state false -> true on a one-port node "A".
LocatedRule flip_rule(std::string name = "R");

/// Undirected simple graph of `n` nodes "A" (port p, state=false).
PortGraph state_graph(std::size_t n, const std::vector<std::pair<int, int>>& edges);

/// Graph with intree=false and key=<id> on every node and edge.
PortGraph tree_graph(std::size_t n, const std::vector<std::pair<int, int>>& edges);

/// The corpus directory baked in at configure time.
std::string corpus_path(const std::string& relative);
ProgramBundle load_corpus(const std::string& dir, const std::string& graph_file,
                          const std::string& strategy_file);

// ---- oracles ----

/// Every morphism by exhaustive enumeration of node, port and edge maps,
/// with its own unification. Sorted by morphism_less.
std::vector<Morphism> brute_force_morphisms(const PortGraph& pattern,
                                            const PortGraph& host);

bool bfs_connected(std::size_t n, const std::vector<std::pair<int, int>>& edges);

/// Number of spanning trees by the matrix-tree theorem (exact integer
/// Bareiss elimination on the reduced Laplacian).
std::int64_t matrix_tree_count(std::size_t n, const std::vector<std::pair<int, int>>& edges);

/// True iff the edges form a spanning tree over nodes 0..n-1.
bool is_spanning_tree(std::size_t n, const std::vector<std::pair<int, int>>& edges);

/// Independent well-formedness check; empty when fine.
std::string well_formed(const LocatedGraph& g);

// ---- generators ----

/// Host graph for matcher tests: names in {A, B}, ports in {p, q}, a few
/// attributes, random (possibly parallel and looping) edges.
PortGraph random_host(Rng& rng, std::size_t max_nodes);
/// Pattern of at most `max_nodes` nodes, usually cut out of `host` and
/// generalised with variables, sometimes unrelated to it.
PortGraph random_pattern(Rng& rng, const PortGraph& host, std::size_t max_nodes);

struct RandomGraph {
  std::size_t n = 0;
  std::vector<std::pair<int, int>> edges;
};
RandomGraph random_simple_graph(Rng& rng, std::size_t n, double p);
RandomGraph random_connected_graph(Rng& rng, std::size_t n, double extra_p);

struct FuzzOptions {
  bool allow_while = true;
  bool allow_repeat = true;
  /// one, ppick, orelse and OneNgb.
  bool allow_nondet = true;
  int max_depth = 4;
};

/// Rules over the fuzz vocabulary: nodes "A" (port p, state), "B" (port p)
/// and "C" (ports l, r); edges labelled e or f.
RuleSet fuzz_rules();
LocatedGraph random_fuzz_graph(Rng& rng);
StrategyPtr random_strategy(Rng& rng, const FuzzOptions& opts);
FocusPtr random_focus(Rng& rng, bool allow_nondet, int depth);
FunctionRegistry fuzz_registry();

/// Canonical bytes of a configuration (slot nodes, outcomes, graphs).
std::string configuration_bytes(const Configuration& c);

}  // namespace sgr::testing
