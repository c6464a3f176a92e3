#include "sgr/subgraph.hpp"

#include <algorithm>
#include <iterator>

#include "sgr/error.hpp"

namespace sgr {

namespace {

void require_same_parent(const Subgraph& a, const Subgraph& b) {
  if (a.parent() != b.parent())
    throw Error(Errc::ParentMismatch,
                "subgraph operands belong to different graphs");
}

template <typename Set>
Set set_union(const Set& a, const Set& b) {
  Set out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::inserter(out, out.end()));
  return out;
}

template <typename Set>
Set set_intersection(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

template <typename Set>
Set set_difference(const Set& a, const Set& b) {
  Set out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

}  // namespace

Subgraph::Subgraph(GraphPtr parent, NodeSet nodes, EdgeSet edges)
    : parent_(std::move(parent)) {
  for (NodeId n : nodes)
    if (parent_ && parent_->contains(n)) nodes_.insert(nodes_.end(), n);
  for (EdgeId id : edges) {
    if (!parent_) break;
    const Edge* e = parent_->find_edge(id);
    if (e && nodes_.count(e->from.node) && nodes_.count(e->to.node))
      edges_.insert(edges_.end(), id);
  }
}

Subgraph Subgraph::whole(GraphPtr parent) {
  NodeSet nodes = parent->node_ids();
  EdgeSet edges = parent->edge_ids();
  Subgraph s(std::move(parent));
  s.nodes_ = std::move(nodes);
  s.edges_ = std::move(edges);
  return s;
}

Subgraph Subgraph::induced(GraphPtr parent, NodeSet nodes) {
  EdgeSet edges;
  for (NodeId n : nodes)
    if (parent->contains(n))
      for (EdgeId e : parent->incident(n)) edges.insert(e);
  return Subgraph(std::move(parent), std::move(nodes), std::move(edges));
}

bool Subgraph::closed() const {
  if (!parent_) return nodes_.empty() && edges_.empty();
  for (NodeId n : nodes_)
    if (!parent_->contains(n)) return false;
  for (EdgeId id : edges_) {
    const Edge* e = parent_->find_edge(id);
    if (!e || !nodes_.count(e->from.node) || !nodes_.count(e->to.node))
      return false;
  }
  return true;
}

Subgraph subgraph_union(const Subgraph& a, const Subgraph& b) {
  require_same_parent(a, b);
  return Subgraph(a.parent(), set_union(a.nodes(), b.nodes()),
                  set_union(a.edges(), b.edges()));
}

Subgraph subgraph_intersection(const Subgraph& a, const Subgraph& b) {
  require_same_parent(a, b);
  return Subgraph(a.parent(), set_intersection(a.nodes(), b.nodes()),
                  set_intersection(a.edges(), b.edges()));
}

Subgraph subgraph_difference(const Subgraph& a, const Subgraph& b) {
  require_same_parent(a, b);
  // The constructor drops the edges of `a` that lost an end.
  return Subgraph(a.parent(), set_difference(a.nodes(), b.nodes()), a.edges());
}

Subgraph subgraph_complement(const Subgraph& a) {
  if (!a.parent()) return a;
  return Subgraph::induced(a.parent(),
                           set_difference(a.parent()->node_ids(), a.nodes()));
}

bool overlaps(const Subgraph& a, const Subgraph& b) {
  require_same_parent(a, b);
  const auto& small = a.nodes().size() <= b.nodes().size() ? a : b;
  const auto& large = &small == &a ? b : a;
  for (NodeId n : small.nodes())
    if (large.contains(n)) return true;
  return false;
}

LocatedGraph::LocatedGraph(GraphPtr g, Subgraph p, Subgraph q)
    : graph(std::move(g)), position(std::move(p)), banned(std::move(q)) {
  if (position.parent() != graph || banned.parent() != graph)
    throw Error(Errc::ParentMismatch,
                "position and banned must be subgraphs of the located graph");
}

LocatedGraph::LocatedGraph(GraphPtr g)
    : graph(g), position(Subgraph::whole(g)), banned(Subgraph(g)) {}

std::vector<std::string> LocatedGraph::validate() const {
  if (!graph) return {"located graph has no graph"};
  auto problems = graph->validate();
  if (position.parent() != graph) problems.push_back("position not over graph");
  if (banned.parent() != graph) problems.push_back("banned not over graph");
  if (!position.closed()) problems.push_back("position is not a closed subgraph");
  if (!banned.closed()) problems.push_back("banned is not a closed subgraph");
  return problems;
}

}  // namespace sgr
