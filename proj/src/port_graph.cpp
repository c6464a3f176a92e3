#include "sgr/port_graph.hpp"

#include <algorithm>

#include "sgr/error.hpp"

namespace sgr {

const Port* Node::find_port(const Label& label) const {
  for (const auto& p : ports)
    if (p.label == label) return &p;
  return nullptr;
}

const Node* PortGraph::find_node(NodeId id) const {
  auto it = nodes_.find(id);
  return it == nodes_.end() ? nullptr : &it->second;
}

const Edge* PortGraph::find_edge(EdgeId id) const {
  auto it = edges_.find(id);
  return it == edges_.end() ? nullptr : &it->second;
}

const Node& PortGraph::node(NodeId id) const {
  if (const auto* n = find_node(id)) return *n;
  throw Error(Errc::DanglingEdge, "no node " + std::to_string(raw(id)));
}

const Edge& PortGraph::edge(EdgeId id) const {
  if (const auto* e = find_edge(id)) return *e;
  throw Error(Errc::DanglingEdge, "no edge " + std::to_string(raw(id)));
}

const EdgeSet& PortGraph::incident(NodeId id) const {
  static const EdgeSet none;
  auto it = incident_.find(id);
  return it == incident_.end() ? none : it->second;
}

std::size_t PortGraph::degree(NodeId id) const {
  std::size_t d = 0;
  for (EdgeId e : incident(id)) d += edge(e).is_loop() ? 2 : 1;
  return d;
}

NodeSet PortGraph::node_ids() const {
  NodeSet out;
  for (const auto& [id, n] : nodes_) out.insert(out.end(), id);
  return out;
}

EdgeSet PortGraph::edge_ids() const {
  EdgeSet out;
  for (const auto& [id, e] : edges_) out.insert(out.end(), id);
  return out;
}

bool PortGraph::has_variables() const {
  for (const auto& [id, n] : nodes_) {
    if (is_variable(n.name) || sgr::has_variables(n.attrs)) return true;
    for (const auto& p : n.ports)
      if (is_variable(p.label) || sgr::has_variables(p.attrs)) return true;
  }
  for (const auto& [id, e] : edges_)
    if (is_variable(e.label) || sgr::has_variables(e.attrs)) return true;
  return false;
}

NodeId PortGraph::add_node(Node node) {
  if (nodes_.count(node.id))
    throw Error(Errc::DuplicateId,
                "duplicate node id " + std::to_string(raw(node.id)));
  for (std::size_t i = 0; i < node.ports.size(); ++i)
    for (std::size_t j = i + 1; j < node.ports.size(); ++j)
      if (node.ports[i].label == node.ports[j].label)
        throw Error(Errc::DuplicatePortLabel,
                    "node " + std::to_string(raw(node.id)) +
                        " has duplicate port " + to_string(node.ports[i].label));
  NodeId id = node.id;
  next_node_ = std::max(next_node_, raw(id) + 1);
  nodes_.emplace(id, std::move(node));
  incident_[id];
  return id;
}

void PortGraph::check_end(const PortRef& end) const {
  const Node* n = find_node(end.node);
  if (!n)
    throw Error(Errc::DanglingEdge,
                "edge end references missing node " +
                    std::to_string(raw(end.node)));
  if (!n->find_port(end.port))
    throw Error(Errc::DanglingEdge, "edge end references missing port " +
                                        std::to_string(raw(end.node)) + "." +
                                        to_string(end.port));
}

EdgeId PortGraph::add_edge(Edge edge) {
  if (edges_.count(edge.id))
    throw Error(Errc::DuplicateId,
                "duplicate edge id " + std::to_string(raw(edge.id)));
  check_end(edge.from);
  check_end(edge.to);
  EdgeId id = edge.id;
  next_edge_ = std::max(next_edge_, raw(id) + 1);
  incident_[edge.from.node].insert(id);
  incident_[edge.to.node].insert(id);
  edges_.emplace(id, std::move(edge));
  return id;
}

void PortGraph::remove_edge(EdgeId id) {
  auto it = edges_.find(id);
  if (it == edges_.end()) return;
  incident_[it->second.from.node].erase(id);
  incident_[it->second.to.node].erase(id);
  edges_.erase(it);
}

void PortGraph::remove_node(NodeId id) {
  if (!contains(id)) return;
  EdgeSet doomed = incident(id);
  for (EdgeId e : doomed) remove_edge(e);
  incident_.erase(id);
  nodes_.erase(id);
}

void PortGraph::set_node_attrs(NodeId id, Attributes attrs) {
  auto it = nodes_.find(id);
  if (it == nodes_.end())
    throw Error(Errc::DanglingEdge, "no node " + std::to_string(raw(id)));
  it->second.attrs = std::move(attrs);
}

std::vector<std::string> PortGraph::validate() const {
  std::vector<std::string> problems;
  for (const auto& [id, n] : nodes_) {
    if (n.id != id) problems.push_back("node key/id mismatch");
    for (std::size_t i = 0; i < n.ports.size(); ++i)
      for (std::size_t j = i + 1; j < n.ports.size(); ++j)
        if (n.ports[i].label == n.ports[j].label)
          problems.push_back("duplicate port on node " +
                             std::to_string(raw(id)));
  }
  for (const auto& [id, e] : edges_) {
    if (e.id != id) problems.push_back("edge key/id mismatch");
    for (const PortRef* end : {&e.from, &e.to}) {
      const Node* n = find_node(end->node);
      if (!n || !n->find_port(end->port))
        problems.push_back("dangling edge " + std::to_string(raw(id)));
      else if (!incident(end->node).count(id))
        problems.push_back("incidence index misses edge " +
                           std::to_string(raw(id)));
    }
  }
  for (const auto& [nid, es] : incident_) {
    if (!contains(nid)) problems.push_back("incidence index for missing node");
    for (EdgeId e : es)
      if (!contains(e)) problems.push_back("incidence index has stale edge");
  }
  return problems;
}

std::vector<std::string> PortGraph::interface_conflicts() const {
  std::map<std::string, std::pair<NodeId, std::set<std::string>>> seen;
  std::vector<std::string> out;
  for (const auto& [id, n] : nodes_) {
    const auto* name = std::get_if<std::string>(&n.name);
    if (!name) continue;
    std::set<std::string> labels;
    for (const auto& p : n.ports) labels.insert(to_string(p.label));
    auto [it, inserted] = seen.emplace(*name, std::make_pair(id, labels));
    if (!inserted && it->second.second != labels)
      out.push_back("nodes " + std::to_string(raw(it->second.first)) +
                    " and " + std::to_string(raw(id)) + " named '" + *name +
                    "' have different ports");
  }
  return out;
}

PortGraph build_graph(std::vector<NodeSpec> nodes, std::vector<EdgeSpec> edges) {
  PortGraph g;

  std::set<NodeId> used_nodes;
  for (const auto& n : nodes)
    if (n.id && !used_nodes.insert(*n.id).second)
      throw Error(Errc::DuplicateId,
                  "duplicate node id " + std::to_string(raw(*n.id)));
  std::uint64_t next = 0;
  for (auto& spec : nodes) {
    NodeId id;
    if (spec.id) {
      id = *spec.id;
    } else {
      while (used_nodes.count(NodeId{next})) ++next;
      id = NodeId{next};
      used_nodes.insert(id);
    }
    g.add_node(Node{id, std::move(spec.name), std::move(spec.ports),
                    std::move(spec.attrs)});
  }

  std::set<EdgeId> used_edges;
  for (const auto& e : edges)
    if (e.id && !used_edges.insert(*e.id).second)
      throw Error(Errc::DuplicateId,
                  "duplicate edge id " + std::to_string(raw(*e.id)));
  next = 0;
  for (auto& spec : edges) {
    EdgeId id;
    if (spec.id) {
      id = *spec.id;
    } else {
      while (used_edges.count(EdgeId{next})) ++next;
      id = EdgeId{next};
      used_edges.insert(id);
    }
    g.add_edge(Edge{id, std::move(spec.label), std::move(spec.from),
                    std::move(spec.to), std::move(spec.attrs)});
  }
  return g;
}

}  // namespace sgr
