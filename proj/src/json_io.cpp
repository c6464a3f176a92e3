#include "sgr/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace sgr {

std::string Diagnostic::str() const {
  std::string out = file;
  if (!location.empty()) out += ":" + location;
  return out + ": " + message;
}

namespace {

std::string join_diagnostics(const std::vector<Diagnostic>& ds) {
  std::string out;
  for (const auto& d : ds) {
    if (!out.empty()) out += "\n";
    out += d.str();
  }
  return out;
}

}  // namespace

InputError::InputError(std::vector<Diagnostic> diagnostics)
    : Error(Errc::InputError, join_diagnostics(diagnostics)),
      diagnostics_(std::move(diagnostics)) {}

// ---- serialization ----

Json value_to_json(const AttributeValue& v) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Variable>)
          return Json{{"$var", x.name}};
        else
          return Json(x);
      },
      v);
}

Json label_to_json(const Label& l) {
  if (const auto* v = std::get_if<Variable>(&l)) return Json{{"$var", v->name}};
  return Json(std::get<std::string>(l));
}

namespace {

Json attrs_to_json(const Attributes& attrs) {
  Json out = Json::object();
  for (const auto& [k, v] : attrs) out[k] = value_to_json(v);
  return out;
}

Json end_to_json(const PortRef& r) {
  return Json::array({raw(r.node), label_to_json(r.port)});
}

}  // namespace

Json graph_to_json(const PortGraph& g) {
  Json nodes = Json::array();
  for (const auto& [id, n] : g.nodes()) {
    Json ports = Json::array();
    for (const auto& p : n.ports)
      ports.push_back(Json{{"label", label_to_json(p.label)}, {"attrs", attrs_to_json(p.attrs)}});
    nodes.push_back(Json{{"id", raw(id)},
                         {"name", label_to_json(n.name)},
                         {"ports", std::move(ports)},
                         {"attrs", attrs_to_json(n.attrs)}});
  }
  Json edges = Json::array();
  for (const auto& [id, e] : g.edges())
    edges.push_back(Json{{"id", raw(id)},
                         {"label", label_to_json(e.label)},
                         {"from", end_to_json(e.from)},
                         {"to", end_to_json(e.to)},
                         {"attrs", attrs_to_json(e.attrs)}});
  return Json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

Json subgraph_to_json(const Subgraph& s) {
  Json nodes = Json::array(), edges = Json::array();
  for (NodeId n : s.nodes()) nodes.push_back(raw(n));
  for (EdgeId e : s.edges()) edges.push_back(raw(e));
  return Json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

Json located_graph_to_json(const LocatedGraph& g) {
  Json out = graph_to_json(g.g());
  out["position"] = subgraph_to_json(g.position);
  out["banned"] = subgraph_to_json(g.banned);
  return out;
}

Json morphism_to_json(const Morphism& m) {
  Json nodes = Json::array(), ports = Json::array(), edges = Json::array();
  for (const auto& [p, h] : m.node_map) nodes.push_back(Json::array({raw(p), raw(h)}));
  for (const auto& [key, h] : m.port_map)
    ports.push_back(Json::array({raw(key.first), label_to_json(key.second), label_to_json(h)}));
  for (const auto& [p, h] : m.edge_map) edges.push_back(Json::array({raw(p), raw(h)}));
  Json binding = Json::object();
  for (const auto& [k, v] : m.binding) binding[k] = value_to_json(v);
  return Json{{"nodes", std::move(nodes)},
              {"ports", std::move(ports)},
              {"edges", std::move(edges)},
              {"binding", std::move(binding)}};
}

std::string morphism_digest(const Morphism& m) {
  std::uint32_t h = 2166136261u;
  for (unsigned char c : morphism_to_json(m).dump()) {
    h ^= c;
    h *= 16777619u;
  }
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", h);
  return buf;
}

namespace {

Json ids_to_json(const std::optional<Subgraph>& s) {
  if (!s) return nullptr;
  Json out = Json::array();
  for (NodeId n : s->nodes()) out.push_back(raw(n));
  return out;
}

}  // namespace

Json rule_to_json(const LocatedRule& r) {
  Json arrow = Json::array();
  for (const auto& port : r.rule.arrow) {
    Json lhs = Json::array(), rhs = Json::array();
    for (const auto& e : port.lhs_edges) lhs.push_back(end_to_json(e));
    for (const auto& e : port.rhs_edges) rhs.push_back(end_to_json(e));
    arrow.push_back(Json{{"type", std::string(to_string(port.type))},
                         {"lhsEdges", std::move(lhs)},
                         {"rhsEdges", std::move(rhs)}});
  }
  Json out{{"name", r.name()},
           {"lhs", graph_to_json(*r.rule.lhs)},
           {"rhs", graph_to_json(*r.rule.rhs)},
           {"arrow", std::move(arrow)}};
  if (r.w) out["W"] = ids_to_json(r.w);
  if (r.m) out["M"] = ids_to_json(r.m);
  if (r.n) out["N"] = ids_to_json(r.n);
  return out;
}

Json tree_to_json(const DerivationTree& t) {
  Json nodes = Json::array();
  for (const auto& n : t.nodes()) {
    Json j{{"id", n.id},
           {"parent", n.parent ? Json(*n.parent) : Json(nullptr)},
           {"status", std::string(to_string(n.status))}};
    if (n.label) {
      if (const auto* r = std::get_if<RewriteLabel>(&*n.label))
        j["label"] = Json{{"kind", "rewrite"},
                          {"rule", r->rule},
                          {"digest", morphism_digest(r->morphism)},
                          {"morphism", morphism_to_json(r->morphism)}};
      else
        j["label"] = Json{{"kind", "control"},
                          {"construct", std::get<ControlLabel>(*n.label).construct}};
    } else {
      j["label"] = nullptr;
    }
    j["graph"] = located_graph_to_json(n.state);
    nodes.push_back(std::move(j));
  }
  return Json{{"nodes", std::move(nodes)}};
}

Json report_to_json(const RunReport& r) {
  const ResultSet rs = r.results();
  Json results = Json::array();
  std::size_t id_results = 0;
  for (const auto& s : rs.results) {
    id_results += s.program.strategy->is_id();
    results.push_back(Json{{"node", s.node},
                           {"outcome", s.program.strategy->is_id() ? "id" : "fail"},
                           {"graph", located_graph_to_json(s.program.state)}});
  }
  Json open = Json::array();
  for (const auto& s : r.final.slots)
    if (!s.program.is_result())
      open.push_back(Json{{"node", s.node}, {"strategy", print_strategy(*s.program.strategy)}});
  Json trajectory = Json::array();
  for (const auto& st : r.trajectory)
    trajectory.push_back(Json{{"probability", st.probability},
                              {"programs", st.program_probabilities}});
  return Json{{"status", std::string(to_string(r.status))},
              {"message", r.message},
              {"seed", r.seed},
              {"steps", r.steps},
              {"complete", rs.complete},
              {"logProbability", r.log_probability},
              {"idResults", id_results},
              {"results", std::move(results)},
              {"open", std::move(open)},
              {"trajectory", std::move(trajectory)},
              {"warnings", r.warnings},
              {"treeSize", r.tree.size()}};
}

// ---- parsing ----

namespace {

/// Collects diagnostics for one file while walking its JSON.
struct Reader {
  const std::string& file;
  std::vector<Diagnostic>& diags;

  void error(const std::string& pointer, const std::string& message) {
    diags.push_back({file, pointer.empty() ? "/" : pointer, message});
  }

  std::optional<AttributeValue> value(const Json& j, const std::string& ptr) {
    if (j.is_string()) return AttributeValue{j.get<std::string>()};
    if (j.is_boolean()) return AttributeValue{j.get<bool>()};
    if (j.is_number_integer()) return AttributeValue{j.get<std::int64_t>()};
    if (j.is_number_float()) return AttributeValue{j.get<double>()};
    if (j.is_object() && j.size() == 1 && j.contains("$var") && j["$var"].is_string())
      return AttributeValue{Variable{j["$var"].get<std::string>()}};
    error(ptr, "expected a string, number, boolean or {\"$var\": name}");
    return std::nullopt;
  }

  std::optional<Label> label(const Json& j, const std::string& ptr) {
    if (j.is_string()) return Label{j.get<std::string>()};
    if (j.is_object() && j.size() == 1 && j.contains("$var") && j["$var"].is_string())
      return Label{Variable{j["$var"].get<std::string>()}};
    error(ptr, "expected a label string or {\"$var\": name}");
    return std::nullopt;
  }

  Attributes attrs(const Json& j, const std::string& ptr) {
    Attributes out;
    if (j.is_null()) return out;
    if (!j.is_object()) {
      error(ptr, "expected an object of attributes");
      return out;
    }
    for (const auto& [k, v] : j.items())
      if (auto val = value(v, ptr + "/" + k)) out[k] = *val;
    return out;
  }

  std::optional<std::uint64_t> id(const Json& j, const std::string& ptr) {
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
      return static_cast<std::uint64_t>(j.get<std::int64_t>());
    error(ptr, "expected a non-negative integer id");
    return std::nullopt;
  }

  std::optional<PortRef> end(const Json& j, const std::string& ptr) {
    if (!j.is_array() || j.size() != 2) {
      error(ptr, "expected [nodeId, portLabel]");
      return std::nullopt;
    }
    auto node = id(j[0], ptr + "/0");
    auto port = label(j[1], ptr + "/1");
    if (!node || !port) return std::nullopt;
    return PortRef{NodeId{*node}, *port};
  }

  const Json* member(const Json& obj, const char* key, const std::string& ptr,
                     bool required) {
    if (obj.contains(key)) return &obj[key];
    if (required) error(ptr, std::string("missing member \"") + key + "\"");
    return nullptr;
  }

  std::optional<PortGraph> graph(const Json& j, const std::string& ptr) {
    if (!j.is_object()) {
      error(ptr, "expected a graph object");
      return std::nullopt;
    }
    const std::size_t before = diags.size();
    std::vector<NodeSpec> nodes;
    std::vector<EdgeSpec> edges;
    if (const Json* ns = member(j, "nodes", ptr, true)) {
      if (!ns->is_array()) error(ptr + "/nodes", "expected an array");
      else
        for (std::size_t i = 0; i < ns->size(); ++i) {
          const Json& n = (*ns)[i];
          const std::string p = ptr + "/nodes/" + std::to_string(i);
          if (!n.is_object()) {
            error(p, "expected a node object");
            continue;
          }
          NodeSpec spec;
          if (n.contains("id"))
            if (auto v = id(n["id"], p + "/id")) spec.id = NodeId{*v};
          if (const Json* name = member(n, "name", p, true))
            if (auto l = label(*name, p + "/name")) spec.name = *l;
          if (n.contains("ports")) {
            const Json& ps = n["ports"];
            if (!ps.is_array()) error(p + "/ports", "expected an array");
            else
              for (std::size_t k = 0; k < ps.size(); ++k) {
                const std::string pp = p + "/ports/" + std::to_string(k);
                Port port;
                if (ps[k].is_object()) {
                  if (const Json* l = member(ps[k], "label", pp, true))
                    if (auto lab = label(*l, pp + "/label")) port.label = *lab;
                  if (ps[k].contains("attrs")) port.attrs = attrs(ps[k]["attrs"], pp + "/attrs");
                } else if (auto lab = label(ps[k], pp)) {
                  port.label = *lab;
                }
                spec.ports.push_back(std::move(port));
              }
          }
          if (n.contains("attrs")) spec.attrs = attrs(n["attrs"], p + "/attrs");
          nodes.push_back(std::move(spec));
        }
    }
    if (const Json* es = member(j, "edges", ptr, false)) {
      if (!es->is_array()) error(ptr + "/edges", "expected an array");
      else
        for (std::size_t i = 0; i < es->size(); ++i) {
          const Json& e = (*es)[i];
          const std::string p = ptr + "/edges/" + std::to_string(i);
          if (!e.is_object()) {
            error(p, "expected an edge object");
            continue;
          }
          EdgeSpec spec;
          if (e.contains("id"))
            if (auto v = id(e["id"], p + "/id")) spec.id = EdgeId{*v};
          spec.label = std::string();
          if (e.contains("label"))
            if (auto l = label(e["label"], p + "/label")) spec.label = *l;
          std::optional<PortRef> from, to;
          if (const Json* f = member(e, "from", p, true)) from = end(*f, p + "/from");
          if (const Json* t = member(e, "to", p, true)) to = end(*t, p + "/to");
          if (e.contains("attrs")) spec.attrs = attrs(e["attrs"], p + "/attrs");
          if (!from || !to) continue;
          spec.from = *from;
          spec.to = *to;
          edges.push_back(std::move(spec));
        }
    }
    if (diags.size() != before) return std::nullopt;
    try {
      return build_graph(std::move(nodes), std::move(edges));
    } catch (const Error& e) {
      error(ptr, std::string(to_string(e.code())) + ": " + e.what());
      return std::nullopt;
    }
  }

  /// Node-id list as an induced subgraph of `parent`.
  std::optional<Subgraph> id_list(const Json& j, const GraphPtr& parent,
                                  const std::string& ptr) {
    if (!j.is_array()) {
      error(ptr, "expected an array of node ids");
      return std::nullopt;
    }
    NodeSet nodes;
    bool ok = true;
    for (std::size_t i = 0; i < j.size(); ++i) {
      auto v = id(j[i], ptr + "/" + std::to_string(i));
      if (!v) {
        ok = false;
        continue;
      }
      if (!parent->contains(NodeId{*v})) {
        error(ptr + "/" + std::to_string(i), "unknown node id " + std::to_string(*v));
        ok = false;
        continue;
      }
      nodes.insert(NodeId{*v});
    }
    if (!ok) return std::nullopt;
    return Subgraph::induced(parent, std::move(nodes));
  }

  /// Position/banned spec: id list, {"nodes","edges"} object, or a focusing
  /// expression evaluated on the whole graph.
  std::optional<Subgraph> subgraph_spec(const Json& j, const GraphPtr& parent,
                                        const FunctionRegistry& registry,
                                        const std::string& ptr) {
    if (j.is_array()) return id_list(j, parent, ptr);
    if (j.is_object()) {
      auto nodes = j.contains("nodes") ? id_list(j["nodes"], parent, ptr + "/nodes")
                                       : std::optional<Subgraph>(Subgraph(parent));
      if (!nodes) return std::nullopt;
      EdgeSet edges;
      if (j.contains("edges")) {
        const Json& es = j["edges"];
        if (!es.is_array()) {
          error(ptr + "/edges", "expected an array of edge ids");
          return std::nullopt;
        }
        for (std::size_t i = 0; i < es.size(); ++i) {
          auto v = id(es[i], ptr + "/edges/" + std::to_string(i));
          if (!v) return std::nullopt;
          const Edge* e = parent->find_edge(EdgeId{*v});
          if (!e || !nodes->contains(e->from.node) || !nodes->contains(e->to.node)) {
            error(ptr + "/edges/" + std::to_string(i),
                  "edge " + std::to_string(*v) + " is not between listed nodes");
            return std::nullopt;
          }
          edges.insert(EdgeId{*v});
        }
      }
      return Subgraph(parent, nodes->nodes(), std::move(edges));
    }
    if (j.is_string()) {
      try {
        FocusPtr f = parse_focus(j.get<std::string>());
        Rng rng(derive_seed(0, {}));
        return eval_focus(*f, LocatedGraph(parent), registry, rng);
      } catch (const Error& e) {
        error(ptr, std::string("focusing expression: ") + e.what());
        return std::nullopt;
      }
    }
    error(ptr, "expected an id list, a {\"nodes\",\"edges\"} object or a focusing expression");
    return std::nullopt;
  }

  std::optional<LocatedRule> rule(const Json& j, const std::string& ptr) {
    if (!j.is_object()) {
      error(ptr, "expected a rule object");
      return std::nullopt;
    }
    const std::size_t before = diags.size();
    LocatedRule out;
    if (const Json* n = member(j, "name", ptr, true)) {
      if (n->is_string() && !n->get<std::string>().empty())
        out.rule.name = n->get<std::string>();
      else
        error(ptr + "/name", "expected a non-empty string");
    }
    std::optional<PortGraph> lhs, rhs;
    if (const Json* l = member(j, "lhs", ptr, true)) lhs = graph(*l, ptr + "/lhs");
    if (const Json* r = member(j, "rhs", ptr, true)) rhs = graph(*r, ptr + "/rhs");
    if (const Json* a = member(j, "arrow", ptr, false)) {
      if (!a->is_array()) error(ptr + "/arrow", "expected an array");
      else
        for (std::size_t i = 0; i < a->size(); ++i) {
          const Json& port = (*a)[i];
          const std::string p = ptr + "/arrow/" + std::to_string(i);
          if (!port.is_object()) {
            error(p, "expected an arrow port object");
            continue;
          }
          ArrowPort ap;
          if (const Json* t = member(port, "type", p, true)) {
            auto type = t->is_string() ? parse_arrow_port_type(t->get<std::string>())
                                       : std::nullopt;
            if (type) ap.type = *type;
            else error(p + "/type", "expected \"bridge\", \"blackhole\" or \"wire\"");
          }
          for (const char* key : {"lhsEdges", "rhsEdges"}) {
            if (!port.contains(key)) continue;
            const Json& list = port[key];
            if (!list.is_array()) {
              error(p + "/" + key, "expected an array of [nodeId, portLabel]");
              continue;
            }
            auto& target = std::string(key) == "lhsEdges" ? ap.lhs_edges : ap.rhs_edges;
            for (std::size_t k = 0; k < list.size(); ++k)
              if (auto e = end(list[k], p + "/" + key + "/" + std::to_string(k)))
                target.push_back(*e);
          }
          out.rule.arrow.push_back(std::move(ap));
        }
    }
    if (!lhs || !rhs || diags.size() != before) return std::nullopt;
    out.rule.lhs = share(std::move(*lhs));
    out.rule.rhs = share(std::move(*rhs));
    if (j.contains("W") && !j["W"].is_null()) out.w = id_list(j["W"], out.rule.lhs, ptr + "/W");
    if (j.contains("M") && !j["M"].is_null()) out.m = id_list(j["M"], out.rule.rhs, ptr + "/M");
    if (j.contains("N") && !j["N"].is_null()) out.n = id_list(j["N"], out.rule.rhs, ptr + "/N");
    if (diags.size() != before) return std::nullopt;
    for (const auto& v : validate_rule(out)) {
      std::string p = ptr;
      if (v.arrow_port) p += "/arrow/" + std::to_string(*v.arrow_port);
      error(p, v.message);
    }
    if (diags.size() != before) return std::nullopt;
    return out;
  }
};

std::size_t line_col_offset(const std::string& text, std::size_t byte, int& line) {
  line = 1;
  std::size_t line_start = 0;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') {
      ++line;
      line_start = i + 1;
    }
  return byte - line_start;
}

/// Splits "L:C: message" into a location and a message.
Diagnostic positioned(const std::string& file, const std::string& what) {
  auto colon = what.find(": ");
  if (colon != std::string::npos && colon > 0 &&
      what.find_first_not_of("0123456789:") == colon + 1)
    return {file, what.substr(0, colon), what.substr(colon + 2)};
  return {file, "", what};
}

}  // namespace

std::optional<Json> parse_json_text(const std::string& text, const std::string& file,
                                    std::vector<Diagnostic>& diags) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    int line = 1;
    // nlohmann reports the byte just past the offending token (1-based).
    std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    std::size_t col = line_col_offset(text, byte, line) + 1;
    std::string msg = e.what();
    auto pos = msg.find("syntax error");
    if (pos != std::string::npos) msg = msg.substr(pos);
    diags.push_back({file, std::to_string(line) + ":" + std::to_string(col), msg});
    return std::nullopt;
  }
}

std::optional<PortGraph> graph_from_json(const Json& j, const std::string& file,
                                         const std::string& pointer,
                                         std::vector<Diagnostic>& diags) {
  Reader r{file, diags};
  return r.graph(j, pointer);
}

PortGraph parse_graph(const std::string& text, const std::string& file) {
  std::vector<Diagnostic> diags;
  auto j = parse_json_text(text, file, diags);
  std::optional<PortGraph> g;
  if (j) g = graph_from_json(*j, file, "", diags);
  if (!diags.empty() || !g) throw InputError(std::move(diags));
  return std::move(*g);
}

ProgramBundle load_bundle_text(const std::string& graph_text,
                               const std::string& rules_text,
                               const std::string& strategy_text,
                               const std::string& graph_file,
                               const std::string& rules_file,
                               const std::string& strategy_file) {
  std::vector<Diagnostic> diags;
  ProgramBundle b;

  // Rules first: they name the builtins the graph's focusing specs may use.
  bool rules_ok = false;
  if (auto j = parse_json_text(rules_text, rules_file, diags)) {
    Reader r{rules_file, diags};
    const std::size_t before = diags.size();
    if (!j->is_object() || !j->contains("rules") || !(*j)["rules"].is_array()) {
      r.error("", "expected an object with a \"rules\" array");
    } else {
      const Json& rules = (*j)["rules"];
      for (std::size_t i = 0; i < rules.size(); ++i) {
        const std::string p = "/rules/" + std::to_string(i);
        auto rule = r.rule(rules[i], p);
        if (!rule) continue;
        std::string name = rule->name();
        if (!b.rules.emplace(name, std::move(*rule)).second)
          r.error(p + "/name", "duplicate rule name '" + name + "'");
      }
      if (j->contains("builtins")) {
        const Json& bs = (*j)["builtins"];
        for (std::size_t i = 0; bs.is_array() && i < bs.size(); ++i) {
          const std::string p = "/builtins/" + std::to_string(i);
          if (!bs[i].is_string()) {
            r.error(p, "expected a function name");
            continue;
          }
          std::string name = bs[i].get<std::string>();
          if (b.registry.contains(name)) {
            r.error(p, "function '" + name + "' listed twice");
          } else if (!b.registry.enable_builtin(name)) {
            r.error(p, "unknown builtin function '" + name + "'");
          } else {
            b.builtins.push_back(name);
          }
        }
        if (!bs.is_array()) r.error("/builtins", "expected an array of names");
      }
    }
    rules_ok = diags.size() == before;
  }

  if (auto j = parse_json_text(graph_text, graph_file, diags)) {
    Reader r{graph_file, diags};
    if (auto g = r.graph(*j, "")) {
      for (const auto& c : g->interface_conflicts()) b.warnings.push_back(graph_file + ": " + c);
      if (g->has_variables()) r.error("", "host graph contains variables");
      GraphPtr gp = share(std::move(*g));
      b.graph = LocatedGraph(gp);
      std::optional<Subgraph> p = b.graph.position, q = b.graph.banned;
      if (j->contains("position")) p = r.subgraph_spec((*j)["position"], gp, b.registry, "/position");
      if (j->contains("banned")) q = r.subgraph_spec((*j)["banned"], gp, b.registry, "/banned");
      if (p && q) b.graph = LocatedGraph(gp, std::move(*p), std::move(*q));
    }
  }

  std::set<std::string> names;
  for (const auto& [name, rule] : b.rules) names.insert(name);
  try {
    // Unknown rules are only meaningful when the rules file itself loaded.
    b.strategy = rules_ok ? parse_strategy(strategy_text, names) : parse_strategy(strategy_text);
    for (const auto& w : condition_warnings(*b.strategy))
      b.warnings.push_back(strategy_file + ": " + w);
  } catch (const Error& e) {
    diags.push_back(positioned(strategy_file, e.what()));
  }

  if (!diags.empty()) throw InputError(std::move(diags));
  return b;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError({{path, "", "cannot open file"}});
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ProgramBundle load_bundle(const std::string& graph_path, const std::string& rules_path,
                          const std::string& strategy_path) {
  std::vector<Diagnostic> diags;
  std::string texts[3];
  const std::string* paths[3] = {&graph_path, &rules_path, &strategy_path};
  for (int i = 0; i < 3; ++i) {
    try {
      texts[i] = read_file(*paths[i]);
    } catch (const InputError& e) {
      diags.insert(diags.end(), e.diagnostics().begin(), e.diagnostics().end());
    }
  }
  if (!diags.empty()) throw InputError(std::move(diags));
  return load_bundle_text(texts[0], texts[1], texts[2], graph_path, rules_path,
                          strategy_path);
}

}  // namespace sgr
