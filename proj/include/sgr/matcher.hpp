#pragma once

#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "sgr/port_graph.hpp"

namespace sgr {

/// An injective occurrence of a pattern graph in a host graph.
struct Morphism {
  std::map<NodeId, NodeId> node_map;
  /// (pattern node, pattern port label) -> host port label.
  std::map<std::pair<NodeId, Label>, Label> port_map;
  std::map<EdgeId, EdgeId> edge_map;
  Binding binding;

  NodeSet image_nodes() const;
  EdgeSet image_edges() const;

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// Deterministic total order used for match output: host node ids in pattern
/// node order, then host edge ids, then ports and binding.
bool morphism_less(const Morphism& a, const Morphism& b);

/// Label and attribute compatibility of a single pattern element with a host
/// element. Host elements may carry attributes the pattern does not mention.
/// Returns the extended binding, or nullopt when incompatible.
std::optional<Binding> element_compatible(const Node& pattern, const Node& host,
                                          const Binding& binding);
std::optional<Binding> element_compatible(const Port& pattern, const Port& host,
                                          const Binding& binding);
std::optional<Binding> element_compatible(const Edge& pattern, const Edge& host,
                                          const Binding& binding);

/// All injective morphisms from `pattern` into `host`, each exactly once,
/// sorted by `morphism_less`. Throws HostContainsVariables.
std::vector<Morphism> find_all_morphisms(const PortGraph& pattern,
                                         const PortGraph& host);

/// Independent re-check of the morphism conditions (used by tests and debug
/// assertions). Returns an empty string when `m` is a valid morphism.
std::string check_morphism(const PortGraph& pattern, const PortGraph& host,
                           const Morphism& m);

}  // namespace sgr
