#include "sgr/matcher.hpp"

#include <algorithm>
#include <tuple>

#include "sgr/error.hpp"

namespace sgr {

NodeSet Morphism::image_nodes() const {
  NodeSet out;
  for (const auto& [p, h] : node_map) out.insert(h);
  return out;
}

EdgeSet Morphism::image_edges() const {
  EdgeSet out;
  for (const auto& [p, h] : edge_map) out.insert(h);
  return out;
}

bool morphism_less(const Morphism& a, const Morphism& b) {
  return std::tie(a.node_map, a.edge_map, a.port_map, a.binding) <
         std::tie(b.node_map, b.edge_map, b.port_map, b.binding);
}

namespace {

bool unify_attrs(const Attributes& pattern, const Attributes& host,
                 Binding& binding) {
  for (const auto& [key, value] : pattern) {
    auto it = host.find(key);
    if (it == host.end() || !unify(value, it->second, binding)) return false;
  }
  return true;
}

}  // namespace

std::optional<Binding> element_compatible(const Node& pattern, const Node& host,
                                          const Binding& binding) {
  Binding b = binding;
  if (!unify(pattern.name, host.name, b)) return std::nullopt;
  if (!unify_attrs(pattern.attrs, host.attrs, b)) return std::nullopt;
  return b;
}

std::optional<Binding> element_compatible(const Port& pattern, const Port& host,
                                          const Binding& binding) {
  Binding b = binding;
  if (!unify(pattern.label, host.label, b)) return std::nullopt;
  if (!unify_attrs(pattern.attrs, host.attrs, b)) return std::nullopt;
  return b;
}

std::optional<Binding> element_compatible(const Edge& pattern, const Edge& host,
                                          const Binding& binding) {
  Binding b = binding;
  if (!unify(pattern.label, host.label, b)) return std::nullopt;
  if (!unify_attrs(pattern.attrs, host.attrs, b)) return std::nullopt;
  return b;
}

namespace {

std::set<NodeId> neighbours(const PortGraph& g, NodeId n) {
  std::set<NodeId> out;
  for (EdgeId id : g.incident(n)) {
    const Edge& e = g.edge(id);
    out.insert(e.from.node == n ? e.to.node : e.from.node);
    if (e.is_loop()) out.insert(n);
  }
  return out;
}

bool same_ends(const PortRef& a1, const PortRef& a2, const Edge& e) {
  return (e.from == a1 && e.to == a2) || (e.from == a2 && e.to == a1);
}

/// Backtracking search over pattern nodes in a connectivity-first order. At
/// each node the ports are assigned, then every pattern edge whose both ends
/// are now placed.
class Search {
 public:
  Search(const PortGraph& pattern, const PortGraph& host)
      : pattern_(pattern), host_(host) {}

  std::vector<Morphism> run() {
    if (!compute_candidates()) return {};
    plan_order();
    assign_node(0);
    std::sort(out_.begin(), out_.end(), morphism_less);
    return std::move(out_);
  }

 private:
  bool compute_candidates() {
    for (const auto& [pid, pn] : pattern_.nodes()) {
      auto& list = candidates_[pid];
      std::size_t pdeg = pattern_.degree(pid);
      for (const auto& [hid, hn] : host_.nodes()) {
        if (hn.ports.size() < pn.ports.size()) continue;
        if (host_.degree(hid) < pdeg) continue;
        if (!element_compatible(pn, hn, {})) continue;
        bool ports_ok = true;
        for (const auto& pp : pn.ports) {
          if (is_variable(pp.label)) continue;
          const Port* hp = hn.find_port(pp.label);
          if (!hp || !element_compatible(pp, *hp, {})) {
            ports_ok = false;
            break;
          }
        }
        if (ports_ok) list.push_back(hid);
      }
      if (list.empty()) return false;
    }

    // Ullmann refinement: a candidate must have, for every pattern
    // neighbour, some host neighbour among that neighbour's candidates.
    std::map<NodeId, std::set<NodeId>> host_adj;
    for (const auto& [hid, hn] : host_.nodes()) host_adj[hid] = neighbours(host_, hid);
    std::map<NodeId, std::set<NodeId>> pat_adj;
    for (const auto& [pid, pn] : pattern_.nodes())
      pat_adj[pid] = neighbours(pattern_, pid);

    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& [pid, list] : candidates_) {
        auto keep = [&](NodeId hid) {
          for (NodeId pk : pat_adj[pid]) {
            const auto& ck = candidates_[pk];
            const auto& hadj = host_adj[hid];
            bool found = std::any_of(ck.begin(), ck.end(), [&](NodeId c) {
              return hadj.count(c) != 0;
            });
            if (!found) return false;
          }
          return true;
        };
        auto before = list.size();
        list.erase(std::remove_if(list.begin(), list.end(),
                                  [&](NodeId h) { return !keep(h); }),
                   list.end());
        if (list.empty()) return false;
        if (list.size() != before) changed = true;
      }
    }
    return true;
  }

  void plan_order() {
    std::set<NodeId> placed;
    while (placed.size() < pattern_.node_count()) {
      std::optional<NodeId> best;
      bool best_adjacent = false;
      for (const auto& [pid, pn] : pattern_.nodes()) {
        if (placed.count(pid)) continue;
        bool adjacent = false;
        for (NodeId nb : neighbours(pattern_, pid))
          if (placed.count(nb)) adjacent = true;
        auto size = candidates_[pid].size();
        if (!best || (adjacent && !best_adjacent) ||
            (adjacent == best_adjacent && size < candidates_[*best].size())) {
          best = pid;
          best_adjacent = adjacent;
        }
      }
      position_[*best] = order_.size();
      order_.push_back(*best);
      placed.insert(*best);
    }
    ready_.assign(order_.size(), {});
    for (const auto& [eid, e] : pattern_.edges()) {
      std::size_t step =
          std::max(position_.at(e.from.node), position_.at(e.to.node));
      ready_[step].push_back(eid);
    }
  }

  void assign_node(std::size_t i) {
    if (i == order_.size()) {
      out_.push_back(current_);
      return;
    }
    NodeId pid = order_[i];
    const Node& pn = pattern_.node(pid);
    for (NodeId hid : candidates_[pid]) {
      if (used_nodes_.count(hid)) continue;
      auto b = element_compatible(pn, host_.node(hid), current_.binding);
      if (!b) continue;
      Binding saved = std::move(current_.binding);
      current_.binding = std::move(*b);
      current_.node_map[pid] = hid;
      used_nodes_.insert(hid);
      std::vector<bool> used_ports(host_.node(hid).ports.size(), false);
      assign_ports(i, 0, used_ports);
      used_nodes_.erase(hid);
      current_.node_map.erase(pid);
      current_.binding = std::move(saved);
    }
  }

  void assign_ports(std::size_t i, std::size_t k, std::vector<bool>& used) {
    NodeId pid = order_[i];
    const Node& pn = pattern_.node(pid);
    if (k == pn.ports.size()) {
      assign_edges(i, 0);
      return;
    }
    const Port& pp = pn.ports[k];
    const Node& hn = host_.node(current_.node_map.at(pid));
    for (std::size_t j = 0; j < hn.ports.size(); ++j) {
      if (used[j]) continue;
      auto b = element_compatible(pp, hn.ports[j], current_.binding);
      if (!b) continue;
      Binding saved = std::move(current_.binding);
      current_.binding = std::move(*b);
      auto key = std::make_pair(pid, pp.label);
      current_.port_map[key] = hn.ports[j].label;
      used[j] = true;
      assign_ports(i, k + 1, used);
      used[j] = false;
      current_.port_map.erase(key);
      current_.binding = std::move(saved);
    }
  }

  PortRef image(const PortRef& end) const {
    return PortRef{current_.node_map.at(end.node),
                   current_.port_map.at({end.node, end.port})};
  }

  void assign_edges(std::size_t i, std::size_t k) {
    if (k == ready_[i].size()) {
      assign_node(i + 1);
      return;
    }
    EdgeId pid = ready_[i][k];
    const Edge& pe = pattern_.edge(pid);
    PortRef a = image(pe.from);
    PortRef b = image(pe.to);
    for (EdgeId hid : host_.incident(a.node)) {
      if (used_edges_.count(hid)) continue;
      const Edge& he = host_.edge(hid);
      if (!same_ends(a, b, he)) continue;
      auto bind = element_compatible(pe, he, current_.binding);
      if (!bind) continue;
      Binding saved = std::move(current_.binding);
      current_.binding = std::move(*bind);
      current_.edge_map[pid] = hid;
      used_edges_.insert(hid);
      assign_edges(i, k + 1);
      used_edges_.erase(hid);
      current_.edge_map.erase(pid);
      current_.binding = std::move(saved);
    }
  }

  const PortGraph& pattern_;
  const PortGraph& host_;
  std::map<NodeId, std::vector<NodeId>> candidates_;
  std::vector<NodeId> order_;
  std::map<NodeId, std::size_t> position_;
  std::vector<std::vector<EdgeId>> ready_;

  Morphism current_;
  std::set<NodeId> used_nodes_;
  std::set<EdgeId> used_edges_;
  std::vector<Morphism> out_;
};

}  // namespace

std::vector<Morphism> find_all_morphisms(const PortGraph& pattern,
                                         const PortGraph& host) {
  if (host.has_variables())
    throw Error(Errc::HostContainsVariables,
                "host graph must not contain variables");
  return Search(pattern, host).run();
}

namespace {

bool matches(const AttributeValue& p, const AttributeValue& h,
             const Binding& b) {
  AttributeValue s = substitute(p, b);
  return !is_variable(s) && values_equal(s, h);
}

bool matches(const Label& p, const Label& h, const Binding& b) {
  return matches(to_value(p), to_value(h), b);
}

bool attrs_match(const Attributes& p, const Attributes& h, const Binding& b) {
  for (const auto& [key, value] : p) {
    auto it = h.find(key);
    if (it == h.end() || !matches(value, it->second, b)) return false;
  }
  return true;
}

}  // namespace

std::string check_morphism(const PortGraph& pattern, const PortGraph& host,
                           const Morphism& m) {
  const Binding& b = m.binding;
  if (m.node_map.size() != pattern.node_count()) return "node map not total";
  if (m.edge_map.size() != pattern.edge_count()) return "edge map not total";
  if (m.image_nodes().size() != m.node_map.size()) return "node map not injective";
  if (m.image_edges().size() != m.edge_map.size()) return "edge map not injective";

  std::size_t ports = 0;
  for (const auto& [pid, pn] : pattern.nodes()) {
    auto it = m.node_map.find(pid);
    if (it == m.node_map.end()) return "unmapped node";
    const Node* hn = host.find_node(it->second);
    if (!hn) return "node image missing from host";
    if (!matches(pn.name, hn->name, b)) return "node name not preserved";
    if (!attrs_match(pn.attrs, hn->attrs, b)) return "node attributes not preserved";
    std::set<Label> images;
    for (const auto& pp : pn.ports) {
      auto pit = m.port_map.find({pid, pp.label});
      if (pit == m.port_map.end()) return "unmapped port";
      const Port* hp = hn->find_port(pit->second);
      if (!hp) return "port image missing";
      if (!matches(pp.label, hp->label, b)) return "port label not preserved";
      if (!attrs_match(pp.attrs, hp->attrs, b)) return "port attributes not preserved";
      if (!images.insert(hp->label).second) return "port map not injective";
      ++ports;
    }
  }
  if (ports != m.port_map.size()) return "port map has extra entries";

  for (const auto& [pid, pe] : pattern.edges()) {
    auto it = m.edge_map.find(pid);
    if (it == m.edge_map.end()) return "unmapped edge";
    const Edge* he = host.find_edge(it->second);
    if (!he) return "edge image missing";
    if (!matches(pe.label, he->label, b)) return "edge label not preserved";
    if (!attrs_match(pe.attrs, he->attrs, b)) return "edge attributes not preserved";
    PortRef a{m.node_map.at(pe.from.node), m.port_map.at({pe.from.node, pe.from.port})};
    PortRef c{m.node_map.at(pe.to.node), m.port_map.at({pe.to.node, pe.to.port})};
    if (!same_ends(a, c, *he)) return "edge attachment not preserved";
  }
  return {};
}

}  // namespace sgr
