#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "sgr/derivation_tree.hpp"
#include "sgr/subgraph.hpp"

namespace sgr {

enum class GraphFormat { Dot, GraphML, Json };
enum class TreeFormat { Dot, Json };

std::optional<GraphFormat> parse_graph_format(std::string_view s);
std::string_view extension(GraphFormat f);

/// Output is sorted by id, so equal inputs give identical bytes. In DOT,
/// ports are record fields, position nodes are filled light blue and banned
/// nodes get a red border.
std::string export_graph(const LocatedGraph& g, GraphFormat format);
std::string export_graph(const PortGraph& g, GraphFormat format);

/// DOT colours fail results red, id results green and open nodes gray; edges
/// are labelled rule@digest or with the control construct.
std::string export_derivation_tree(const DerivationTree& t, TreeFormat format);

}  // namespace sgr
