#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sgr/attribute.hpp"

namespace sgr {

enum class NodeId : std::uint64_t {};
enum class EdgeId : std::uint64_t {};

constexpr std::uint64_t raw(NodeId id) { return static_cast<std::uint64_t>(id); }
constexpr std::uint64_t raw(EdgeId id) { return static_cast<std::uint64_t>(id); }

using NodeSet = std::set<NodeId>;
using EdgeSet = std::set<EdgeId>;

struct Port {
  Label label;
  Attributes attrs;
  friend bool operator==(const Port&, const Port&) = default;
};

struct Node {
  NodeId id{};
  Label name;
  std::vector<Port> ports;
  Attributes attrs;

  const Port* find_port(const Label& label) const;
  friend bool operator==(const Node&, const Node&) = default;
};

/// One attachment point of an edge.
struct PortRef {
  NodeId node{};
  Label port;
  friend bool operator==(const PortRef&, const PortRef&) = default;
  friend auto operator<=>(const PortRef&, const PortRef&) = default;
};

struct Edge {
  EdgeId id{};
  Label label;
  PortRef from;
  PortRef to;
  Attributes attrs;

  bool is_loop() const { return from.node == to.node; }
  /// The end that is not `(node, port)`; for a loop on the same port this is
  /// the other end by position.
  const PortRef& opposite(const PortRef& end) const {
    return from == end ? to : from;
  }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Input description of a node for `build_graph`. A missing id is assigned
/// from the smallest unused id, in input order.
struct NodeSpec {
  std::optional<NodeId> id;
  Label name;
  std::vector<Port> ports;
  Attributes attrs;
};

struct EdgeSpec {
  std::optional<EdgeId> id;
  Label label;
  PortRef from;
  PortRef to;
  Attributes attrs;
};

/// An attributed port graph. Edges are undirected and attach to ports;
/// parallel edges on the same pair of ports are distinct by id.
///
/// The mutators keep the graph well formed at every step (no dangling edges,
/// unique ids, unique port labels per node). Shared instances are handed out
/// as `GraphPtr` and never mutated afterwards.
class PortGraph {
 public:
  PortGraph() = default;

  const std::map<NodeId, Node>& nodes() const { return nodes_; }
  const std::map<EdgeId, Edge>& edges() const { return edges_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return nodes_.empty(); }

  const Node* find_node(NodeId id) const;
  const Edge* find_edge(EdgeId id) const;
  const Node& node(NodeId id) const;
  const Edge& edge(EdgeId id) const;
  bool contains(NodeId id) const { return nodes_.count(id) != 0; }
  bool contains(EdgeId id) const { return edges_.count(id) != 0; }

  /// Edges incident to `id` in id order (a loop is listed once).
  const EdgeSet& incident(NodeId id) const;
  /// Number of edge ends at `id`; a loop counts twice.
  std::size_t degree(NodeId id) const;

  NodeSet node_ids() const;
  EdgeSet edge_ids() const;

  /// True if any label or attribute value is a variable.
  bool has_variables() const;

  NodeId add_node(Node node);
  EdgeId add_edge(Edge edge);
  /// Removes the node and every incident edge.
  void remove_node(NodeId id);
  void remove_edge(EdgeId id);
  void set_node_attrs(NodeId id, Attributes attrs);

  NodeId next_node_id() const { return NodeId{next_node_}; }
  EdgeId next_edge_id() const { return EdgeId{next_edge_}; }
  NodeId fresh_node_id() { return NodeId{next_node_++}; }
  EdgeId fresh_edge_id() { return EdgeId{next_edge_++}; }

  /// Structural self-check; returns one message per violated invariant.
  std::vector<std::string> validate() const;
  /// Pairs of concrete node names whose port-label sets disagree.
  std::vector<std::string> interface_conflicts() const;

  friend bool operator==(const PortGraph& a, const PortGraph& b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
  }

 private:
  void check_end(const PortRef& end) const;

  std::map<NodeId, Node> nodes_;
  std::map<EdgeId, Edge> edges_;
  std::map<NodeId, EdgeSet> incident_;
  std::uint64_t next_node_ = 0;
  std::uint64_t next_edge_ = 0;
};

using GraphPtr = std::shared_ptr<const PortGraph>;

/// Validates the descriptions and returns the graph. Throws `Error` with
/// DuplicateId, DuplicatePortLabel or DanglingEdge.
PortGraph build_graph(std::vector<NodeSpec> nodes, std::vector<EdgeSpec> edges);

inline GraphPtr share(PortGraph g) {
  return std::make_shared<const PortGraph>(std::move(g));
}

}  // namespace sgr
