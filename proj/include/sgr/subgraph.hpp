#pragma once

#include "sgr/port_graph.hpp"

namespace sgr {

/// A selection of nodes and edges of a shared parent graph.
///
/// Membership is decided per node; a node always carries all of its ports.
/// Edges are kept only when listed and both of their end nodes are members,
/// so a subgraph never contains an edge hanging out of it.
class Subgraph {
 public:
  Subgraph() = default;
  /// Empty subgraph of `parent`.
  explicit Subgraph(GraphPtr parent) : parent_(std::move(parent)) {}
  /// Drops listed ids that are not in the parent and edges whose ends are not
  /// both listed.
  Subgraph(GraphPtr parent, NodeSet nodes, EdgeSet edges);

  static Subgraph whole(GraphPtr parent);
  /// `nodes` plus every parent edge between them.
  static Subgraph induced(GraphPtr parent, NodeSet nodes);

  const GraphPtr& parent() const { return parent_; }
  const NodeSet& nodes() const { return nodes_; }
  const EdgeSet& edges() const { return edges_; }
  bool empty() const { return nodes_.empty(); }
  bool contains(NodeId n) const { return nodes_.count(n) != 0; }
  bool contains(EdgeId e) const { return edges_.count(e) != 0; }

  /// True if every listed edge has both ends among the listed nodes and all
  /// ids exist in the parent.
  bool closed() const;

  friend bool operator==(const Subgraph& a, const Subgraph& b) {
    return a.parent_ == b.parent_ && a.nodes_ == b.nodes_ &&
           a.edges_ == b.edges_;
  }

 private:
  GraphPtr parent_;
  NodeSet nodes_;
  EdgeSet edges_;
};

/// Set algebra; all operands must share the same parent (ParentMismatch).
Subgraph subgraph_union(const Subgraph& a, const Subgraph& b);
Subgraph subgraph_intersection(const Subgraph& a, const Subgraph& b);
/// Nodes of `a` not in `b`, with the edges of `a` whose ends both survive.
Subgraph subgraph_difference(const Subgraph& a, const Subgraph& b);
/// Node-level complement within the parent (induced on the remaining nodes).
Subgraph subgraph_complement(const Subgraph& a);
/// True iff the node sets intersect.
bool overlaps(const Subgraph& a, const Subgraph& b);

/// A port graph with a position subgraph P (where rewriting may happen) and
/// a banned subgraph Q (where it may not). P and Q may intersect.
struct LocatedGraph {
  GraphPtr graph;
  Subgraph position;
  Subgraph banned;

  LocatedGraph() = default;
  LocatedGraph(GraphPtr g, Subgraph p, Subgraph q);
  /// P = whole graph, Q = empty.
  explicit LocatedGraph(GraphPtr g);

  const PortGraph& g() const { return *graph; }

  /// Structural check of the graph plus P/Q well-formedness.
  std::vector<std::string> validate() const;
};

}  // namespace sgr
