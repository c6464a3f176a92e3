#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace sgr::testing {

// ---- builders ----

NodeSpec node(std::uint64_t id, Label name, std::vector<std::string> ports,
              Attributes attrs) {
  NodeSpec n;
  n.id = NodeId{id};
  n.name = std::move(name);
  for (auto& p : ports) n.ports.push_back(Port{Label{std::move(p)}, {}});
  n.attrs = std::move(attrs);
  return n;
}

EdgeSpec edge(std::uint64_t id, std::uint64_t a, std::string pa, std::uint64_t b,
              std::string pb, Label label, Attributes attrs) {
  EdgeSpec e;
  e.id = EdgeId{id};
  e.label = std::move(label);
  e.from = PortRef{NodeId{a}, Label{std::move(pa)}};
  e.to = PortRef{NodeId{b}, Label{std::move(pb)}};
  e.attrs = std::move(attrs);
  return e;
}

PortGraph graph(std::vector<NodeSpec> nodes, std::vector<EdgeSpec> edges) {
  return build_graph(std::move(nodes), std::move(edges));
}

LocatedRule rule(std::string name, PortGraph lhs, PortGraph rhs,
                 std::vector<ArrowPort> arrow) {
  LocatedRule r;
  r.rule.name = std::move(name);
  r.rule.lhs = share(std::move(lhs));
  r.rule.rhs = share(std::move(rhs));
  r.rule.arrow = std::move(arrow);
  return r;
}

ArrowPort bridge(std::vector<PortRef> lhs, std::vector<PortRef> rhs) {
  return ArrowPort{ArrowPortType::Bridge, std::move(lhs), std::move(rhs)};
}

ArrowPort blackhole(std::vector<PortRef> lhs) {
  return ArrowPort{ArrowPortType::Blackhole, std::move(lhs), {}};
}

ArrowPort wire(PortRef a, PortRef b) {
  return ArrowPort{ArrowPortType::Wire, {std::move(a), std::move(b)}, {}};
}

LocatedRule flip_rule(std::string name) {
  return rule(std::move(name), graph({node(0, "A", {"p"}, {{"state", false}})}),
              graph({node(0, "A", {"p"}, {{"state", true}})}),
              {bridge({at(0, "p")}, {at(0, "p")})});
}

PortGraph state_graph(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<NodeSpec> ns;
  std::vector<EdgeSpec> es;
  for (std::size_t i = 0; i < n; ++i) ns.push_back(node(i, "A", {"p"}, {{"state", false}}));
  for (std::size_t k = 0; k < edges.size(); ++k)
    es.push_back(edge(k, edges[k].first, "p", edges[k].second, "p"));
  return graph(std::move(ns), std::move(es));
}

PortGraph tree_graph(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<NodeSpec> ns;
  std::vector<EdgeSpec> es;
  for (std::size_t i = 0; i < n; ++i)
    ns.push_back(node(i, "A", {"p"},
                      {{"intree", false}, {"key", static_cast<std::int64_t>(i)}}));
  for (std::size_t k = 0; k < edges.size(); ++k)
    es.push_back(edge(k, edges[k].first, "p", edges[k].second, "p", std::string("e"),
                      {{"intree", false}, {"key", static_cast<std::int64_t>(k)}}));
  return graph(std::move(ns), std::move(es));
}

std::string corpus_path(const std::string& relative) {
  return std::string(SGR_CORPUS_DIR) + "/" + relative;
}

ProgramBundle load_corpus(const std::string& dir, const std::string& graph_file,
                          const std::string& strategy_file) {
  return load_bundle(corpus_path(dir + "/" + graph_file), corpus_path(dir + "/rules.json"),
                     corpus_path(dir + "/" + strategy_file));
}

// ---- oracles ----

namespace {

bool same_value(const AttributeValue& a, const AttributeValue& b) {
  auto num = [](const AttributeValue& v) -> std::optional<long double> {
    if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<long double>(*i);
    if (const auto* d = std::get_if<double>(&v)) return static_cast<long double>(*d);
    return std::nullopt;
  };
  if (std::holds_alternative<std::int64_t>(a) && std::holds_alternative<std::int64_t>(b))
    return std::get<std::int64_t>(a) == std::get<std::int64_t>(b);
  auto na = num(a), nb = num(b);
  if (na && nb) return *na == *nb;
  if (a.index() != b.index()) return false;
  return a == b;
}

bool bind_value(const AttributeValue& pat, const AttributeValue& host, Binding& b) {
  if (const auto* v = std::get_if<Variable>(&pat)) {
    auto it = b.find(v->name);
    if (it != b.end()) return same_value(it->second, host);
    b.emplace(v->name, host);
    return true;
  }
  return same_value(pat, host);
}

bool bind_label(const Label& pat, const Label& host, Binding& b) {
  const AttributeValue h = std::get<std::string>(host);
  if (const auto* v = std::get_if<Variable>(&pat)) return bind_value(AttributeValue{*v}, h, b);
  return std::get<std::string>(pat) == std::get<std::string>(host);
}

bool bind_attrs(const Attributes& pat, const Attributes& host, Binding& b) {
  for (const auto& [k, v] : pat) {
    auto it = host.find(k);
    if (it == host.end() || !bind_value(v, it->second, b)) return false;
  }
  return true;
}

struct Enumerator {
  const PortGraph& p;
  const PortGraph& h;
  std::vector<const Node*> pnodes;
  std::vector<const Edge*> pedges;
  std::vector<Morphism> out;

  void nodes(std::size_t i, Morphism m, std::set<NodeId> used) {
    if (i == pnodes.size()) return edges(0, std::move(m), {});
    const Node& pn = *pnodes[i];
    for (const auto& [hid, hn] : h.nodes()) {
      if (used.count(hid)) continue;
      Binding b = m.binding;
      if (!bind_label(pn.name, hn.name, b) || !bind_attrs(pn.attrs, hn.attrs, b)) continue;
      Morphism next = m;
      next.binding = std::move(b);
      next.node_map[pn.id] = hid;
      auto u = used;
      u.insert(hid);
      ports(i, 0, std::move(next), u, {});
    }
  }

  void ports(std::size_t i, std::size_t k, Morphism m, const std::set<NodeId>& used,
             std::set<std::size_t> taken) {
    const Node& pn = *pnodes[i];
    if (k == pn.ports.size()) return nodes(i + 1, std::move(m), used);
    const Node& hn = h.node(m.node_map.at(pn.id));
    for (std::size_t j = 0; j < hn.ports.size(); ++j) {
      if (taken.count(j)) continue;
      Binding b = m.binding;
      if (!bind_label(pn.ports[k].label, hn.ports[j].label, b) ||
          !bind_attrs(pn.ports[k].attrs, hn.ports[j].attrs, b))
        continue;
      Morphism next = m;
      next.binding = std::move(b);
      next.port_map[{pn.id, pn.ports[k].label}] = hn.ports[j].label;
      auto t = taken;
      t.insert(j);
      ports(i, k + 1, std::move(next), used, std::move(t));
    }
  }

  void edges(std::size_t j, Morphism m, std::set<EdgeId> used) {
    if (j == pedges.size()) {
      out.push_back(std::move(m));
      return;
    }
    const Edge& pe = *pedges[j];
    const PortRef a{m.node_map.at(pe.from.node), m.port_map.at({pe.from.node, pe.from.port})};
    const PortRef z{m.node_map.at(pe.to.node), m.port_map.at({pe.to.node, pe.to.port})};
    for (const auto& [hid, he] : h.edges()) {
      if (used.count(hid)) continue;
      const bool attached = (he.from == a && he.to == z) || (he.from == z && he.to == a);
      if (!attached) continue;
      Binding b = m.binding;
      if (!bind_label(pe.label, he.label, b) || !bind_attrs(pe.attrs, he.attrs, b)) continue;
      Morphism next = m;
      next.binding = std::move(b);
      next.edge_map[pe.id] = hid;
      auto u = used;
      u.insert(hid);
      edges(j + 1, std::move(next), std::move(u));
    }
  }
};

}  // namespace

std::vector<Morphism> brute_force_morphisms(const PortGraph& pattern, const PortGraph& host) {
  Enumerator e{pattern, host, {}, {}, {}};
  for (const auto& [id, n] : pattern.nodes()) e.pnodes.push_back(&n);
  for (const auto& [id, ed] : pattern.edges()) e.pedges.push_back(&ed);
  e.nodes(0, Morphism{}, {});
  std::sort(e.out.begin(), e.out.end(), morphism_less);
  return std::move(e.out);
}

bool bfs_connected(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  if (n == 0) return true;
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(n, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        q.push(w);
      }
  }
  return count == n;
}

std::int64_t matrix_tree_count(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  if (n <= 1) return 1;
  const std::size_t m = n - 1;
  std::vector<std::vector<std::int64_t>> a(m, std::vector<std::int64_t>(m, 0));
  for (auto [u, v] : edges) {
    if (u == v) continue;
    auto add = [&](int i, int j, std::int64_t d) {
      if (i > 0 && j > 0) a[i - 1][j - 1] += d;
    };
    add(u, u, 1);
    add(v, v, 1);
    add(u, v, -1);
    add(v, u, -1);
  }
  // Bareiss fraction-free elimination.
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < m && a[r][k] == 0) ++r;
      if (r == m) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m; ++i)
      for (std::size_t j = k + 1; j < m; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[m - 1][m - 1];
}

bool is_spanning_tree(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  if (n == 0) return edges.empty();
  if (edges.size() != n - 1) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [a, b] : edges) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

std::string well_formed(const LocatedGraph& lg) {
  if (!lg.graph) return "no graph";
  const PortGraph& g = *lg.graph;
  for (const auto& [id, n] : g.nodes()) {
    if (n.id != id) return "node id mismatch";
    if (is_variable(n.name)) return "variable node name in host";
    std::set<std::string> labels;
    for (const auto& p : n.ports) {
      if (is_variable(p.label)) return "variable port label in host";
      if (!labels.insert(std::get<std::string>(p.label)).second) return "duplicate port label";
    }
  }
  for (const auto& [id, e] : g.edges()) {
    if (e.id != id) return "edge id mismatch";
    for (const PortRef* end : {&e.from, &e.to}) {
      const Node* n = g.find_node(end->node);
      if (!n) return "dangling edge " + std::to_string(raw(id));
      bool found = false;
      for (const auto& p : n->ports) found = found || p.label == end->port;
      if (!found) return "edge " + std::to_string(raw(id)) + " attached to a missing port";
    }
  }
  for (const Subgraph* s : {&lg.position, &lg.banned}) {
    if (s->parent() != lg.graph) return "subgraph over another graph";
    for (NodeId n : s->nodes())
      if (!g.find_node(n)) return "subgraph lists a missing node";
    for (EdgeId e : s->edges()) {
      const Edge* ed = g.find_edge(e);
      if (!ed) return "subgraph lists a missing edge";
      if (!s->contains(ed->from.node) || !s->contains(ed->to.node))
        return "subgraph edge hangs out of the subgraph";
    }
  }
  return "";
}

// ---- generators ----

namespace {

bool chance(Rng& rng, double p) { return uniform_unit(rng) < p; }
std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(uniform_index(rng, n)); }

}  // namespace

PortGraph random_host(Rng& rng, std::size_t max_nodes) {
  const std::size_t n = 1 + pick(rng, max_nodes);
  std::vector<NodeSpec> ns;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> ports;
    const std::size_t mask = 1 + pick(rng, 3);
    if (mask & 1) ports.push_back("p");
    if (mask & 2) ports.push_back("q");
    Attributes attrs;
    if (chance(rng, 0.6)) attrs["state"] = chance(rng, 0.5);
    if (chance(rng, 0.4)) attrs["w"] = static_cast<std::int64_t>(pick(rng, 3));
    ns.push_back(node(i, chance(rng, 0.6) ? "A" : "B", std::move(ports), std::move(attrs)));
  }
  std::vector<EdgeSpec> es;
  const std::size_t m = pick(rng, 2 * n + 1);
  for (std::size_t k = 0; k < m; ++k) {
    const auto& a = ns[pick(rng, n)];
    const auto& b = ns[pick(rng, n)];
    Attributes attrs;
    if (chance(rng, 0.3)) attrs["w"] = static_cast<std::int64_t>(pick(rng, 3));
    es.push_back(edge(k, raw(*a.id), std::get<std::string>(a.ports[pick(rng, a.ports.size())].label),
                      raw(*b.id), std::get<std::string>(b.ports[pick(rng, b.ports.size())].label),
                      std::string(chance(rng, 0.5) ? "e" : "f"), std::move(attrs)));
  }
  return graph(std::move(ns), std::move(es));
}

PortGraph random_pattern(Rng& rng, const PortGraph& host, std::size_t max_nodes) {
  auto generalise_value = [&](const AttributeValue& v) -> AttributeValue {
    if (chance(rng, 0.3)) return Variable{"V" + std::to_string(pick(rng, 2))};
    return v;
  };
  if (host.empty() || chance(rng, 0.15)) {
    PortGraph p = random_host(rng, max_nodes);
    std::vector<NodeSpec> ns;
    for (const auto& [id, n] : p.nodes()) {
      NodeSpec s{id, n.name, n.ports, {}};
      if (chance(rng, 0.3)) s.name = Variable{"X" + std::to_string(pick(rng, 2))};
      for (const auto& [k, v] : n.attrs) s.attrs[k] = generalise_value(v);
      ns.push_back(std::move(s));
    }
    std::vector<EdgeSpec> es;
    for (const auto& [id, e] : p.edges()) es.push_back(EdgeSpec{id, e.label, e.from, e.to, e.attrs});
    return graph(std::move(ns), std::move(es));
  }

  const NodeSet all_ids = host.node_ids();
  std::vector<NodeId> ids(all_ids.begin(), all_ids.end());
  for (std::size_t i = ids.size(); i > 1; --i) std::swap(ids[i - 1], ids[pick(rng, i)]);
  const std::size_t k = 1 + pick(rng, std::min(max_nodes, ids.size()));
  ids.resize(k);

  std::vector<NodeSpec> ns;
  std::map<NodeId, std::uint64_t> renumber;
  std::map<NodeId, std::map<std::string, Label>> kept_ports;
  for (std::size_t i = 0; i < k; ++i) {
    const Node& h = host.node(ids[i]);
    renumber[ids[i]] = i;
    NodeSpec s;
    s.id = NodeId{i};
    s.name = chance(rng, 0.25) ? Label{Variable{"X" + std::to_string(pick(rng, 2))}} : h.name;
    for (const auto& port : h.ports) {
      if (!chance(rng, 0.7)) continue;
      Label l = chance(rng, 0.2) ? Label{Variable{"P" + std::to_string(pick(rng, 3))}} : port.label;
      kept_ports[ids[i]][std::get<std::string>(port.label)] = l;
      s.ports.push_back(Port{l, {}});
    }
    for (const auto& [key, v] : h.attrs)
      if (chance(rng, 0.5)) s.attrs[key] = generalise_value(v);
    ns.push_back(std::move(s));
  }
  std::vector<EdgeSpec> es;
  std::uint64_t next = 0;
  for (const auto& [id, e] : host.edges()) {
    if (!renumber.count(e.from.node) || !renumber.count(e.to.node)) continue;
    auto& pf = kept_ports[e.from.node];
    auto& pt = kept_ports[e.to.node];
    auto f = pf.find(std::get<std::string>(e.from.port));
    auto t = pt.find(std::get<std::string>(e.to.port));
    if (f == pf.end() || t == pt.end() || !chance(rng, 0.7)) continue;
    EdgeSpec s;
    s.id = EdgeId{next++};
    s.label = chance(rng, 0.2) ? Label{Variable{"L" + std::to_string(pick(rng, 2))}} : e.label;
    s.from = PortRef{NodeId{renumber[e.from.node]}, f->second};
    s.to = PortRef{NodeId{renumber[e.to.node]}, t->second};
    for (const auto& [key, v] : e.attrs)
      if (chance(rng, 0.5)) s.attrs[key] = generalise_value(v);
    es.push_back(std::move(s));
  }
  try {
    return graph(std::move(ns), std::move(es));
  } catch (const Error&) {
    // Two ports generalised to the same variable label collide; fall back to
    // the concrete cut.
    return random_pattern(rng, host, max_nodes);
  }
}

RandomGraph random_simple_graph(Rng& rng, std::size_t n, double p) {
  RandomGraph g{n, {}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (chance(rng, p)) g.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return g;
}

RandomGraph random_connected_graph(Rng& rng, std::size_t n, double extra_p) {
  RandomGraph g{n, {}};
  std::set<std::pair<int, int>> present;
  for (std::size_t v = 1; v < n; ++v) {
    int u = static_cast<int>(pick(rng, v));
    g.edges.emplace_back(u, static_cast<int>(v));
    present.emplace(u, static_cast<int>(v));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!present.count({static_cast<int>(a), static_cast<int>(b)}) && chance(rng, extra_p))
        g.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return g;
}

RuleSet fuzz_rules() {
  RuleSet rules;
  auto add = [&](LocatedRule r) {
    if (!validate_rule(r).empty())
      throw std::logic_error("fuzz rule " + r.name() + ": " + validate_rule(r).front().message);
    rules.emplace(r.name(), std::move(r));
  };
  add(flip_rule("flip"));
  add(rule("unflip", graph({node(0, "A", {"p"}, {{"state", true}})}),
           graph({node(0, "A", {"p"}, {{"state", false}})}), {bridge({at(0, "p")}, {at(0, "p")})}));
  add(rule("grow", graph({node(0, "A", {"p"}, {{"state", var("S")}})}),
           graph({node(0, "A", {"p"}, {{"state", var("S")}}), node(1, "B", {"p"})},
                 {edge(0, 0, "p", 1, "p")}),
           {bridge({at(0, "p")}, {at(0, "p")})}));
  add(rule("del", graph({node(0, "B", {"p"})}), graph({}), {blackhole({at(0, "p")})}));
  add(rule("bypass", graph({node(0, "C", {"l", "r"})}), graph({}), {wire(at(0, "l"), at(0, "r"))}));
  auto pair_side = [](const char* label) {
    return graph({node(0, "A", {"p"}, {{"state", var("S1")}}),
                  node(1, "A", {"p"}, {{"state", var("S2")}})},
                 {edge(0, 0, "p", 1, "p", std::string(label))});
  };
  add(rule("relabel", pair_side("e"), pair_side("f"),
           {bridge({at(0, "p")}, {at(0, "p")}), bridge({at(1, "p")}, {at(1, "p")})}));
  LocatedRule located = flip_rule("flipW");
  located.w = Subgraph::induced(located.rule.lhs, {NodeId{0}});
  located.m = Subgraph(located.rule.rhs);
  located.n = Subgraph::induced(located.rule.rhs, {NodeId{0}});
  add(std::move(located));
  return rules;
}

FunctionRegistry fuzz_registry() { return FunctionRegistry::with_builtins(); }

LocatedGraph random_fuzz_graph(Rng& rng) {
  const std::size_t n = 2 + pick(rng, 5);
  std::vector<NodeSpec> ns;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = uniform_unit(rng);
    if (r < 0.6)
      ns.push_back(node(i, "A", {"p"}, {{"state", chance(rng, 0.5)}}));
    else if (r < 0.8)
      ns.push_back(node(i, "B", {"p"}));
    else
      ns.push_back(node(i, "C", {"l", "r"}));
  }
  std::vector<EdgeSpec> es;
  const std::size_t m = pick(rng, 9);
  for (std::size_t k = 0; k < m; ++k) {
    const auto& a = ns[pick(rng, n)];
    const auto& b = ns[pick(rng, n)];
    es.push_back(edge(k, raw(*a.id), std::get<std::string>(a.ports[pick(rng, a.ports.size())].label),
                      raw(*b.id), std::get<std::string>(b.ports[pick(rng, b.ports.size())].label),
                      std::string(chance(rng, 0.5) ? "e" : "f")));
  }
  GraphPtr g = share(graph(std::move(ns), std::move(es)));
  auto subset = [&] {
    NodeSet s;
    for (NodeId id : g->node_ids())
      if (chance(rng, 0.5)) s.insert(id);
    return Subgraph::induced(g, std::move(s));
  };
  Subgraph p = chance(rng, 0.7) ? Subgraph::whole(g) : subset();
  Subgraph q = chance(rng, 0.7) ? Subgraph(g) : subset();
  return LocatedGraph(g, std::move(p), std::move(q));
}

FocusPtr random_focus(Rng& rng, bool allow_nondet, int depth) {
  if (depth <= 0 || chance(rng, 0.35)) {
    switch (pick(rng, 4)) {
      case 0: return make::crt_graph();
      case 1: return make::crt_pos();
      case 2: return make::crt_ban();
      default: return make::empty_set();
    }
  }
  auto sub = [&] { return random_focus(rng, allow_nondet, depth - 1); };
  switch (pick(rng, allow_nondet ? 6 : 5)) {
    case 0: return make::all_ngb(sub());
    case 1: return make::next_ngb(sub());
    case 2: {
      static const PropertyExpr props[] = {
          ElemProperty{Elem::Node, Comparison{AttrRef{"state"}, Relop::Eq, AttributeValue{true}}},
          ElemProperty{Elem::Node, Comparison{LabelRef{}, Relop::Eq, AttributeValue{std::string("A")}}},
          ElemProperty{Elem::Node, Comparison{AttrRef{"state"}, Relop::Ne, AttributeValue{false}}},
          ElemProperty{Elem::Edge, Comparison{LabelRef{}, Relop::Eq, AttributeValue{std::string("e")}}},
          ElemProperty{Elem::Port, Comparison{LabelRef{}, Relop::Eq, AttributeValue{std::string("l")}}},
          FunctionProperty{"leaves"},
          FunctionProperty{"root"},
          FunctionProperty{"isolated"},
      };
      return make::property(props[pick(rng, std::size(props))], sub());
    }
    case 3: return make::set_union(sub(), sub());
    case 4:
      return chance(rng, 0.5) ? make::set_intersection(sub(), sub())
                              : make::set_difference(sub(), sub());
    default: return make::one_ngb(sub());
  }
}

namespace {

StrategyPtr gen_strategy(Rng& rng, const FuzzOptions& o, int depth) {
  static const char* rules[] = {"flip", "unflip", "grow", "del", "bypass", "relabel", "flipW"};
  auto rule_name = [&] { return std::string(rules[pick(rng, std::size(rules))]); };
  auto leaf = [&]() -> StrategyPtr {
    switch (pick(rng, o.allow_nondet ? 8 : 7)) {
      case 0: return make::id();
      case 1: return make::fail();
      case 2: case 3: return make::all(rule_name());
      case 4: return make::set_pos(random_focus(rng, o.allow_nondet, 2));
      case 5: return make::set_ban(random_focus(rng, o.allow_nondet, 2));
      case 6: return make::is_empty(random_focus(rng, o.allow_nondet, 2));
      default: return make::one(rule_name());
    }
  };
  if (depth <= 0 || chance(rng, 0.3)) return leaf();
  auto sub = [&] { return gen_strategy(rng, o, depth - 1); };
  std::vector<int> kinds = {0, 0, 1, 2};
  if (o.allow_while) kinds.push_back(3);
  if (o.allow_repeat) kinds.push_back(4);
  if (o.allow_nondet) {
    kinds.push_back(5);
    kinds.push_back(6);
  }
  switch (kinds[pick(rng, kinds.size())]) {
    case 0: return make::seq(sub(), sub());
    case 1: return make::if_then_else(sub(), sub(), sub());
    case 2: return make::not_(sub());
    case 3: return make::while_do(sub(), sub());
    case 4: return make::repeat(sub());
    case 5: return make::or_else(sub(), sub());
    default: {
      static const std::vector<std::vector<double>> weights = {
          {0.5, 0.5}, {0.25, 0.75}, {0.2, 0.3, 0.5}, {1.0}};
      const auto& w = weights[pick(rng, weights.size())];
      std::vector<std::pair<StrategyPtr, double>> branches;
      for (double p : w) branches.emplace_back(sub(), p);
      return make::ppick(std::move(branches));
    }
  }
}

}  // namespace

StrategyPtr random_strategy(Rng& rng, const FuzzOptions& opts) {
  StrategyPtr s = gen_strategy(rng, opts, opts.max_depth);
  while (s->is_result()) s = gen_strategy(rng, opts, opts.max_depth);
  return s;
}

std::string configuration_bytes(const Configuration& c) {
  std::string out;
  for (const auto& s : c.slots) {
    out += std::to_string(s.node) + " " + print_strategy(*s.program.strategy) + " ";
    out += located_graph_to_json(s.program.state).dump() + "\n";
  }
  return out;
}

}  // namespace sgr::testing
