#include "sgr/rewrite.hpp"

#include <algorithm>

#include "sgr/error.hpp"

namespace sgr {

std::string_view to_string(ArrowPortType t) {
  switch (t) {
    case ArrowPortType::Bridge: return "bridge";
    case ArrowPortType::Blackhole: return "blackhole";
    case ArrowPortType::Wire: return "wire";
  }
  return "?";
}

std::optional<ArrowPortType> parse_arrow_port_type(std::string_view s) {
  if (s == "bridge") return ArrowPortType::Bridge;
  if (s == "blackhole") return ArrowPortType::Blackhole;
  if (s == "wire") return ArrowPortType::Wire;
  return std::nullopt;
}

namespace {

void collect(const Label& l, std::set<std::string>& out) {
  if (const auto* v = std::get_if<Variable>(&l)) out.insert(v->name);
}

void collect(const Attributes& attrs, std::set<std::string>& out) {
  for (const auto& [k, v] : attrs)
    if (const auto* var = std::get_if<Variable>(&v)) out.insert(var->name);
}

std::set<std::string> variables_of(const PortGraph& g) {
  std::set<std::string> out;
  for (const auto& [id, n] : g.nodes()) {
    collect(n.name, out);
    collect(n.attrs, out);
    for (const auto& p : n.ports) {
      collect(p.label, out);
      collect(p.attrs, out);
    }
  }
  for (const auto& [id, e] : g.edges()) {
    collect(e.label, out);
    collect(e.attrs, out);
  }
  return out;
}

bool port_exists(const PortGraph& g, const PortRef& ref) {
  const Node* n = g.find_node(ref.node);
  return n && n->find_port(ref.port);
}

std::string describe(const PortRef& ref) {
  return std::to_string(raw(ref.node)) + "." + to_string(ref.port);
}

}  // namespace

std::vector<RuleViolation> validate_rule(const RewriteRule& rule) {
  std::vector<RuleViolation> out;
  auto report = [&](ViolationKind kind, std::optional<std::size_t> port,
                    std::string msg) {
    out.push_back({kind, port, std::move(msg)});
  };

  std::set<PortRef> wired;
  for (std::size_t i = 0; i < rule.arrow.size(); ++i) {
    const ArrowPort& a = rule.arrow[i];
    const std::string where =
        "arrow port " + std::to_string(i) + " (" + std::string(to_string(a.type)) + ")";
    switch (a.type) {
      case ArrowPortType::Bridge:
        if (a.lhs_edges.size() != 1)
          report(ViolationKind::BridgeLhsArity, i,
                 where + ": needs exactly one edge to L, has " +
                     std::to_string(a.lhs_edges.size()));
        if (a.rhs_edges.empty())
          report(ViolationKind::BridgeMissingRhs, i,
                 where + ": needs at least one edge to R");
        break;
      case ArrowPortType::Blackhole:
        if (a.lhs_edges.empty())
          report(ViolationKind::BlackholeMissingLhs, i,
                 where + ": needs at least one edge to L");
        if (!a.rhs_edges.empty())
          report(ViolationKind::BlackholeHasRhs, i,
                 where + ": must not have edges to R");
        break;
      case ArrowPortType::Wire:
        if (a.lhs_edges.size() != 2)
          report(ViolationKind::WireLhsArity, i,
                 where + ": needs exactly two edges to L, has " +
                     std::to_string(a.lhs_edges.size()));
        if (!a.rhs_edges.empty())
          report(ViolationKind::WireHasRhs, i,
                 where + ": must not have edges to R");
        break;
    }
    for (const auto& ref : a.lhs_edges) {
      if (!rule.lhs || !port_exists(*rule.lhs, ref))
        report(ViolationKind::UnknownLhsPort, i,
               where + ": unknown L port " + describe(ref));
      if (!wired.insert(ref).second)
        report(ViolationKind::LhsPortWiredTwice, i,
               where + ": L port " + describe(ref) + " is wired more than once");
    }
    for (const auto& ref : a.rhs_edges)
      if (!rule.rhs || !port_exists(*rule.rhs, ref))
        report(ViolationKind::UnknownRhsPort, i,
               where + ": unknown R port " + describe(ref));
  }

  if (rule.lhs && rule.rhs) {
    auto lvars = variables_of(*rule.lhs);
    for (const auto& v : variables_of(*rule.rhs))
      if (!lvars.count(v))
        report(ViolationKind::FreeRhsVariable, std::nullopt,
               "variable $" + v + " occurs in R but not in L");
  }
  return out;
}

std::vector<RuleViolation> validate_rule(const LocatedRule& lr) {
  auto out = validate_rule(lr.rule);
  if (lr.w && lr.w->parent() != lr.rule.lhs)
    out.push_back({ViolationKind::WNotInLhs, std::nullopt,
                   "W is not a subgraph of L"});
  if (lr.m && lr.m->parent() != lr.rule.rhs)
    out.push_back({ViolationKind::MNotInRhs, std::nullopt,
                   "M is not a subgraph of R"});
  if (lr.n && lr.n->parent() != lr.rule.rhs)
    out.push_back({ViolationKind::NNotInRhs, std::nullopt,
                   "N is not a subgraph of R"});
  if (lr.m && lr.n && lr.m->parent() == lr.n->parent() && overlaps(*lr.m, *lr.n))
    out.push_back({ViolationKind::MNOverlap, std::nullopt,
                   "M and N must be disjoint"});
  return out;
}

bool is_legal(const LocatedRule& lr, const LocatedGraph& g, const Morphism& m) {
  NodeSet image = m.image_nodes();
  NodeSet in_p;
  for (NodeId n : image)
    if (g.position.contains(n)) in_p.insert(n);
  if (lr.w) {
    NodeSet w_image;
    for (NodeId n : lr.w->nodes()) w_image.insert(m.node_map.at(n));
    if (in_p != w_image) return false;
  } else if (in_p.empty()) {
    return false;
  }
  for (NodeId n : image)
    if (g.banned.contains(n)) return false;
  return true;
}

std::vector<Morphism> legal_morphisms(const LocatedRule& lr,
                                      const LocatedGraph& g) {
  auto all = find_all_morphisms(*lr.rule.lhs, *g.graph);
  std::vector<Morphism> out;
  for (auto& m : all)
    if (is_legal(lr, g, m)) out.push_back(std::move(m));
  return out;
}

LegalSet legal_reducts(const LocatedRule& lr, const LocatedGraph& g) {
  LegalSet out;
  for (auto& m : legal_morphisms(lr, g)) {
    LocatedGraph reduct = apply_at(lr, g, m);
    out.push_back({std::move(m), std::move(reduct)});
  }
  return out;
}

namespace {

/// Where one end of a boundary edge goes after the rewrite.
struct Resolution {
  enum Kind { Keep, Targets, Wire } kind = Keep;
  std::vector<PortRef> targets;
  std::size_t wire = 0;
  PortRef lhs_port;  // for wires: which side
};

}  // namespace

LocatedGraph apply_at(const LocatedRule& lr, const LocatedGraph& g,
                      const Morphism& m) {
  const PortGraph& lhs = *lr.rule.lhs;
  const PortGraph& rhs = *lr.rule.rhs;
  const PortGraph& host = *g.graph;

  if (auto why = check_morphism(lhs, host, m); !why.empty())
    throw Error(Errc::IllegalMorphism, "rule " + lr.name() + ": " + why);
  if (!is_legal(lr, g, m))
    throw Error(Errc::IllegalMorphism,
                "rule " + lr.name() + ": match violates the position/banned conditions");

  const NodeSet doomed = m.image_nodes();
  const EdgeSet matched = m.image_edges();

  // Host port (node, label) -> L port, and L port -> arrow port.
  std::map<PortRef, PortRef> host_to_lhs;
  for (const auto& [key, host_label] : m.port_map)
    host_to_lhs[PortRef{m.node_map.at(key.first), host_label}] =
        PortRef{key.first, key.second};
  std::map<PortRef, std::size_t> arrow_of;
  for (std::size_t i = 0; i < lr.rule.arrow.size(); ++i)
    for (const auto& ref : lr.rule.arrow[i].lhs_edges) arrow_of[ref] = i;

  PortGraph out = host;

  // Fresh instance of R with variables substituted.
  std::map<NodeId, NodeId> r_nodes;
  std::vector<Node> new_nodes;
  for (const auto& [rid, rn] : rhs.nodes()) {
    Node n;
    n.id = out.fresh_node_id();
    n.name = substitute_label(rn.name, m.binding);
    for (const auto& p : rn.ports) {
      Port np{substitute_label(p.label, m.binding), {}};
      for (const auto& [k, v] : p.attrs) np.attrs[k] = substitute(v, m.binding);
      n.ports.push_back(std::move(np));
    }
    for (const auto& [k, v] : rn.attrs) n.attrs[k] = substitute(v, m.binding);
    r_nodes[rid] = n.id;
    new_nodes.push_back(std::move(n));
  }
  auto r_port = [&](const PortRef& ref) {
    return PortRef{r_nodes.at(ref.node), substitute_label(ref.port, m.binding)};
  };
  std::map<EdgeId, EdgeId> r_edges;
  std::vector<Edge> new_edges;
  for (const auto& [rid, re] : rhs.edges()) {
    Edge e;
    e.id = out.fresh_edge_id();
    e.label = substitute_label(re.label, m.binding);
    e.from = r_port(re.from);
    e.to = r_port(re.to);
    for (const auto& [k, v] : re.attrs) e.attrs[k] = substitute(v, m.binding);
    r_edges[rid] = e.id;
    new_edges.push_back(std::move(e));
  }

  auto resolve = [&](const PortRef& end, EdgeId edge) {
    Resolution r;
    if (!doomed.count(end.node)) {
      r.targets.push_back(end);
      return r;
    }
    auto lit = host_to_lhs.find(end);
    auto ait = lit == host_to_lhs.end() ? arrow_of.end() : arrow_of.find(lit->second);
    if (ait == arrow_of.end())
      throw Error(Errc::UnwiredBoundaryEdge,
                  "rule " + lr.name() + ": edge " + std::to_string(raw(edge)) +
                      " reaches matched port " + describe(end) +
                      " which no arrow port covers");
    const ArrowPort& a = lr.rule.arrow[ait->second];
    switch (a.type) {
      case ArrowPortType::Bridge:
        r.kind = Resolution::Targets;
        for (const auto& ref : a.rhs_edges) r.targets.push_back(r_port(ref));
        break;
      case ArrowPortType::Blackhole:
        r.kind = Resolution::Targets;
        break;
      case ArrowPortType::Wire:
        r.kind = Resolution::Wire;
        r.wire = ait->second;
        r.lhs_port = lit->second;
        break;
    }
    return r;
  };

  struct Stub {
    const Edge* edge;
    std::vector<PortRef> outer;
  };
  // wire index -> L port -> stubs
  std::map<std::size_t, std::map<PortRef, std::vector<Stub>>> stubs;
  std::vector<Edge> reconnected;

  EdgeSet boundary;
  for (NodeId n : doomed)
    for (EdgeId e : host.incident(n))
      if (!matched.count(e)) boundary.insert(e);

  for (EdgeId id : boundary) {
    const Edge& e = host.edge(id);
    Resolution a = resolve(e.from, id);
    Resolution b = resolve(e.to, id);
    if (a.kind == Resolution::Wire && b.kind == Resolution::Wire) continue;
    if (a.kind == Resolution::Wire || b.kind == Resolution::Wire) {
      const Resolution& w = a.kind == Resolution::Wire ? a : b;
      const Resolution& o = a.kind == Resolution::Wire ? b : a;
      stubs[w.wire][w.lhs_port].push_back(Stub{&e, o.targets});
      continue;
    }
    bool first = true;
    for (const auto& x : a.targets)
      for (const auto& y : b.targets) {
        Edge ne = e;
        if (!first) ne.id = out.fresh_edge_id();
        ne.from = x;
        ne.to = y;
        first = false;
        reconnected.push_back(std::move(ne));
      }
  }

  // Fuse the stubs of each wire pairwise; the fused edge copies the edge at
  // the lower L port.
  for (const auto& [wire, sides] : stubs) {
    const auto& ports = lr.rule.arrow[wire].lhs_edges;
    PortRef lo = std::min(ports[0], ports[1]);
    PortRef hi = std::max(ports[0], ports[1]);
    auto lo_it = sides.find(lo);
    auto hi_it = sides.find(hi);
    if (lo_it == sides.end() || hi_it == sides.end()) continue;
    for (const Stub& s1 : lo_it->second)
      for (const Stub& s2 : hi_it->second) {
        if (s1.edge == s2.edge) continue;
        for (const auto& x : s1.outer)
          for (const auto& y : s2.outer) {
            Edge ne = *s1.edge;
            ne.id = out.fresh_edge_id();
            ne.from = x;
            ne.to = y;
            reconnected.push_back(std::move(ne));
          }
      }
  }

  for (NodeId n : doomed) out.remove_node(n);
  for (auto& n : new_nodes) out.add_node(std::move(n));
  for (auto& e : new_edges) out.add_edge(std::move(e));
  for (auto& e : reconnected) out.add_edge(std::move(e));

  GraphPtr next = share(std::move(out));

  // P' = (P \ g(L)) u g(M), Q' = Q u g(N), both over the new graph.
  auto keep_outside = [&](const Subgraph& s) {
    NodeSet nodes;
    for (NodeId n : s.nodes())
      if (!doomed.count(n)) nodes.insert(n);
    EdgeSet edges;
    for (EdgeId e : s.edges())
      if (!matched.count(e) && !boundary.count(e)) edges.insert(e);
    return Subgraph(next, std::move(nodes), std::move(edges));
  };
  auto image_of = [&](const std::optional<Subgraph>& part, bool default_all) {
    NodeSet nodes;
    EdgeSet edges;
    if (part) {
      for (NodeId n : part->nodes()) nodes.insert(r_nodes.at(n));
      for (EdgeId e : part->edges()) edges.insert(r_edges.at(e));
    } else if (default_all) {
      for (const auto& [r, h] : r_nodes) nodes.insert(h);
      for (const auto& [r, h] : r_edges) edges.insert(h);
    }
    return Subgraph(next, std::move(nodes), std::move(edges));
  };

  Subgraph position = subgraph_union(keep_outside(g.position), image_of(lr.m, true));
  Subgraph banned = subgraph_union(keep_outside(g.banned), image_of(lr.n, false));
  return LocatedGraph(next, std::move(position), std::move(banned));
}

}  // namespace sgr
