#include "sgr/focusing.hpp"

#include "sgr/error.hpp"

namespace sgr {

void FunctionRegistry::register_builtin(const std::string& name, SubgraphFunction fn) {
  if (!fns_.emplace(name, std::move(fn)).second)
    throw Error(Errc::DuplicateFunction, "function '" + name + "' already registered");
}

const SubgraphFunction& FunctionRegistry::get(const std::string& name) const {
  auto it = fns_.find(name);
  if (it == fns_.end())
    throw Error(Errc::UnknownFunction, "unknown function '" + name + "'");
  return it->second;
}

std::vector<std::string> FunctionRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, fn] : fns_) out.push_back(name);
  return out;
}

const std::vector<std::string>& FunctionRegistry::builtin_names() {
  static const std::vector<std::string> names = {"root", "leaves", "isolated"};
  return names;
}

bool FunctionRegistry::enable_builtin(const std::string& name) {
  auto by_degree = [](std::size_t wanted) {
    return [wanted](const LocatedGraph& g) {
      NodeSet nodes;
      for (const auto& [id, n] : g.g().nodes())
        if (g.g().degree(id) == wanted) nodes.insert(id);
      return Subgraph::induced(g.graph, std::move(nodes));
    };
  };
  if (name == "root") {
    register_builtin(name, [](const LocatedGraph& g) {
      NodeSet nodes;
      if (!g.g().empty()) nodes.insert(g.g().nodes().begin()->first);
      return Subgraph::induced(g.graph, std::move(nodes));
    });
  } else if (name == "leaves") {
    register_builtin(name, by_degree(1));
  } else if (name == "isolated") {
    register_builtin(name, by_degree(0));
  } else {
    return false;
  }
  return true;
}

FunctionRegistry FunctionRegistry::with_builtins() {
  FunctionRegistry r;
  for (const auto& name : builtin_names()) r.enable_builtin(name);
  return r;
}

NodeSet neighbour_nodes(const PortGraph& g, const NodeSet& sources,
                        const std::string* port_label) {
  NodeSet out;
  for (NodeId v : sources) {
    if (!g.contains(v)) continue;
    for (EdgeId id : g.incident(v)) {
      const Edge& e = g.edge(id);
      for (const auto* end : {&e.from, &e.to}) {
        if (end->node != v) continue;
        if (port_label && end->port != Label{*port_label}) continue;
        out.insert(e.opposite(*end).node);
      }
    }
  }
  return out;
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool satisfies(const Label& label, const Attributes& attrs, const Comparison& c) {
  std::optional<AttributeValue> lhs;
  if (std::holds_alternative<LabelRef>(c.lhs)) {
    lhs = to_value(label);
  } else {
    auto it = attrs.find(std::get<AttrRef>(c.lhs).name);
    if (it != attrs.end()) lhs = it->second;
  }
  if (!lhs) return false;
  if (const auto* ref = std::get_if<AttrRef>(&c.rhs)) {
    auto it = attrs.find(ref->name);
    if (it == attrs.end()) return false;
    return compare(*lhs, c.op, it->second);
  }
  return compare(*lhs, c.op, std::get<AttributeValue>(c.rhs));
}

}  // namespace

Subgraph eval_property(const PropertyExpr& rho, const Subgraph& base,
                       const LocatedGraph& g, const FunctionRegistry& registry) {
  if (const auto* fn = std::get_if<FunctionProperty>(&rho))
    return subgraph_intersection(registry.get(fn->name)(g), base);

  const auto& p = std::get<ElemProperty>(rho);
  const PortGraph& graph = *base.parent();
  switch (p.elem) {
    case Elem::Node: {
      NodeSet keep;
      for (NodeId id : base.nodes()) {
        const Node& n = graph.node(id);
        if (satisfies(n.name, n.attrs, p.test)) keep.insert(id);
      }
      return Subgraph(base.parent(), std::move(keep), base.edges());
    }
    case Elem::Port: {
      NodeSet keep;
      for (NodeId id : base.nodes()) {
        const Node& n = graph.node(id);
        for (const auto& port : n.ports)
          if (satisfies(port.label, port.attrs, p.test)) {
            keep.insert(id);
            break;
          }
      }
      return Subgraph(base.parent(), std::move(keep), base.edges());
    }
    case Elem::Edge: {
      EdgeSet keep;
      for (EdgeId id : base.edges()) {
        const Edge& e = graph.edge(id);
        if (satisfies(e.label, e.attrs, p.test)) keep.insert(id);
      }
      return Subgraph(base.parent(), base.nodes(), std::move(keep));
    }
  }
  return base;
}

Subgraph eval_focus(const Focus& f, const LocatedGraph& g,
                    const FunctionRegistry& registry, Rng& rng) {
  using namespace focus;
  return std::visit(
      overloaded{
          [&](const CrtGraph&) { return Subgraph::whole(g.graph); },
          [&](const CrtPos&) { return g.position; },
          [&](const CrtBan&) { return g.banned; },
          [&](const EmptySet&) { return Subgraph(g.graph); },
          [&](const AllNgb& x) {
            auto src = eval_focus(*x.arg, g, registry, rng);
            return Subgraph(g.graph, neighbour_nodes(g.g(), src.nodes()), {});
          },
          [&](const NextNgb& x) {
            static const std::string next = "next";
            auto src = eval_focus(*x.arg, g, registry, rng);
            return Subgraph(g.graph, neighbour_nodes(g.g(), src.nodes(), &next), {});
          },
          [&](const OneNgb& x) {
            auto src = eval_focus(*x.arg, g, registry, rng);
            NodeSet candidates = neighbour_nodes(g.g(), src.nodes());
            if (candidates.empty()) return Subgraph(g.graph);
            auto it = candidates.begin();
            std::advance(it, uniform_index(rng, candidates.size()));
            return Subgraph(g.graph, NodeSet{*it}, {});
          },
          [&](const Property& x) {
            auto base = eval_focus(*x.arg, g, registry, rng);
            return eval_property(x.rho, base, g, registry);
          },
          [&](const Binary& x) {
            auto a = eval_focus(*x.lhs, g, registry, rng);
            auto b = eval_focus(*x.rhs, g, registry, rng);
            switch (x.op) {
              case SetOp::Union: return subgraph_union(a, b);
              case SetOp::Intersection: return subgraph_intersection(a, b);
              case SetOp::Difference: return subgraph_difference(a, b);
            }
            return a;
          },
      },
      f.node);
}

}  // namespace sgr
