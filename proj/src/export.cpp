#include "sgr/export.hpp"

#include <map>
#include <sstream>

#include "sgr/json_io.hpp"

namespace sgr {

std::optional<GraphFormat> parse_graph_format(std::string_view s) {
  if (s == "dot") return GraphFormat::Dot;
  if (s == "graphml") return GraphFormat::GraphML;
  if (s == "json") return GraphFormat::Json;
  return std::nullopt;
}

std::string_view extension(GraphFormat f) {
  switch (f) {
    case GraphFormat::Dot: return "dot";
    case GraphFormat::GraphML: return "graphml";
    case GraphFormat::Json: return "json";
  }
  return "";
}

namespace {

/// Text of a label or value without JSON-style quoting.
std::string plain(const AttributeValue& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  return to_string(v);
}

std::string plain(const Label& l) { return plain(to_value(l)); }

std::string dot_quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

/// Escapes the characters that structure a record label.
std::string record_escaped(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (std::string_view("{}|<> \"\\").find(c) != std::string_view::npos) out += '\\';
    out += c;
  }
  return out;
}

std::string xml_escaped(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string attr_lines(const Attributes& attrs) {
  std::string out;
  for (const auto& [k, v] : attrs) out += "\\n" + record_escaped(k + "=" + to_string(v));
  return out;
}

std::string port_field(std::size_t i) {
  return "p" + std::to_string(i);
}

std::size_t port_index(const Node& n, const Label& port) {
  for (std::size_t i = 0; i < n.ports.size(); ++i)
    if (n.ports[i].label == port) return i;
  return 0;
}

std::string graph_dot(const PortGraph& g, const Subgraph* pos, const Subgraph* ban) {
  std::ostringstream out;
  out << "graph G {\n  node [shape=record];\n";
  for (const auto& [id, n] : g.nodes()) {
    std::string label = "{" + record_escaped(plain(n.name)) + attr_lines(n.attrs);
    if (!n.ports.empty()) {
      label += "|{";
      for (std::size_t i = 0; i < n.ports.size(); ++i) {
        if (i) label += "|";
        label += "<" + port_field(i) + "> " + record_escaped(plain(n.ports[i].label)) +
                 attr_lines(n.ports[i].attrs);
      }
      label += "}";
    }
    label += "}";
    out << "  n" << raw(id) << " [label=" << dot_quoted(label);
    if (pos && pos->contains(id)) out << ", style=filled, fillcolor=lightblue";
    if (ban && ban->contains(id)) out << ", color=red, penwidth=2";
    out << "];\n";
  }
  for (const auto& [id, e] : g.edges()) {
    const Node& a = g.node(e.from.node);
    const Node& b = g.node(e.to.node);
    std::string label = plain(e.label);
    for (const auto& [k, v] : e.attrs) label += "\n" + k + "=" + to_string(v);
    out << "  n" << raw(e.from.node) << ":" << port_field(port_index(a, e.from.port))
        << " -- n" << raw(e.to.node) << ":" << port_field(port_index(b, e.to.port))
        << " [id=" << dot_quoted("e" + std::to_string(raw(id)))
        << ", label=" << dot_quoted(label);
    if (pos && pos->contains(id)) out << ", color=blue";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string graph_graphml(const PortGraph& g, const Subgraph* pos, const Subgraph* ban) {
  std::map<std::string, std::string> node_keys, edge_keys;
  for (const auto& [id, n] : g.nodes())
    for (const auto& [k, v] : n.attrs) node_keys.emplace(k, "na_" + std::to_string(node_keys.size()));
  for (const auto& [id, e] : g.edges())
    for (const auto& [k, v] : e.attrs) edge_keys.emplace(k, "ea_" + std::to_string(edge_keys.size()));

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
         "  <key id=\"name\" for=\"node\" attr.name=\"name\" attr.type=\"string\"/>\n"
         "  <key id=\"position\" for=\"node\" attr.name=\"position\" attr.type=\"boolean\"/>\n"
         "  <key id=\"banned\" for=\"node\" attr.name=\"banned\" attr.type=\"boolean\"/>\n"
         "  <key id=\"label\" for=\"edge\" attr.name=\"label\" attr.type=\"string\"/>\n";
  for (const auto& [k, id] : node_keys)
    out << "  <key id=\"" << id << "\" for=\"node\" attr.name=\"" << xml_escaped(k)
        << "\" attr.type=\"string\"/>\n";
  for (const auto& [k, id] : edge_keys)
    out << "  <key id=\"" << id << "\" for=\"edge\" attr.name=\"" << xml_escaped(k)
        << "\" attr.type=\"string\"/>\n";
  out << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
  for (const auto& [id, n] : g.nodes()) {
    out << "    <node id=\"n" << raw(id) << "\">\n";
    for (const auto& p : n.ports)
      out << "      <port name=\"" << xml_escaped(plain(p.label)) << "\"/>\n";
    out << "      <data key=\"name\">" << xml_escaped(plain(n.name)) << "</data>\n";
    if (pos) out << "      <data key=\"position\">" << (pos->contains(id) ? "true" : "false") << "</data>\n";
    if (ban) out << "      <data key=\"banned\">" << (ban->contains(id) ? "true" : "false") << "</data>\n";
    for (const auto& [k, v] : n.attrs)
      out << "      <data key=\"" << node_keys.at(k) << "\">" << xml_escaped(plain(v)) << "</data>\n";
    out << "    </node>\n";
  }
  for (const auto& [id, e] : g.edges()) {
    out << "    <edge id=\"e" << raw(id) << "\" source=\"n" << raw(e.from.node)
        << "\" target=\"n" << raw(e.to.node) << "\" sourceport=\""
        << xml_escaped(plain(e.from.port)) << "\" targetport=\""
        << xml_escaped(plain(e.to.port)) << "\">\n";
    out << "      <data key=\"label\">" << xml_escaped(plain(e.label)) << "</data>\n";
    for (const auto& [k, v] : e.attrs)
      out << "      <data key=\"" << edge_keys.at(k) << "\">" << xml_escaped(plain(v)) << "</data>\n";
    out << "    </edge>\n";
  }
  out << "  </graph>\n</graphml>\n";
  return out.str();
}

}  // namespace

std::string export_graph(const LocatedGraph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::Dot: return graph_dot(g.g(), &g.position, &g.banned);
    case GraphFormat::GraphML: return graph_graphml(g.g(), &g.position, &g.banned);
    case GraphFormat::Json: return located_graph_to_json(g).dump(2) + "\n";
  }
  return "";
}

std::string export_graph(const PortGraph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::Dot: return graph_dot(g, nullptr, nullptr);
    case GraphFormat::GraphML: return graph_graphml(g, nullptr, nullptr);
    case GraphFormat::Json: return graph_to_json(g).dump(2) + "\n";
  }
  return "";
}

std::string export_derivation_tree(const DerivationTree& t, TreeFormat format) {
  if (format == TreeFormat::Json) return tree_to_json(t).dump(2) + "\n";
  std::ostringstream out;
  out << "digraph derivation {\n  node [shape=box, style=filled];\n";
  for (const auto& n : t.nodes()) {
    const char* colour = n.status == NodeStatus::FailResult ? "red"
                         : n.status == NodeStatus::IdResult ? "green"
                                                            : "gray";
    out << "  t" << n.id << " [label=\"" << n.id << "\", fillcolor=" << colour << "];\n";
  }
  for (const auto& n : t.nodes()) {
    if (!n.parent) continue;
    std::string label;
    if (const auto* r = std::get_if<RewriteLabel>(&*n.label))
      label = r->rule + "@" + morphism_digest(r->morphism);
    else
      label = std::get<ControlLabel>(*n.label).construct;
    out << "  t" << *n.parent << " -> t" << n.id << " [label=" << dot_quoted(label) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace sgr
