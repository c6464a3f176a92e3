#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sgr/matcher.hpp"
#include "sgr/subgraph.hpp"

namespace sgr {

using TreeNodeId = std::size_t;

enum class NodeStatus { Open, IdResult, FailResult };

std::string_view to_string(NodeStatus s);

/// Edge label of a rewrite step: the rule and the morphism used.
struct RewriteLabel {
  std::string rule;
  Morphism morphism;
};

/// Edge label of a control step (a conditional dispatch).
struct ControlLabel {
  std::string construct;
};

using TreeLabel = std::variant<RewriteLabel, ControlLabel>;

/// Derivation tree of a run. Nodes hold the latest located graph of the
/// program living there; nodes are only ever appended, so ids are stable.
class DerivationTree {
 public:
  struct Node {
    TreeNodeId id = 0;
    std::optional<TreeNodeId> parent;
    std::optional<TreeLabel> label;
    LocatedGraph state;
    NodeStatus status = NodeStatus::Open;
    std::vector<TreeNodeId> children;
    /// Number of program steps taken at this node; keys the random streams.
    std::uint64_t steps = 0;
  };

  TreeNodeId add_root(LocatedGraph state);
  TreeNodeId add_child(TreeNodeId parent, LocatedGraph state, TreeLabel label);
  void update(TreeNodeId id, LocatedGraph state, NodeStatus status);
  std::uint64_t next_step(TreeNodeId id) { return nodes_.at(id).steps++; }

  const Node& node(TreeNodeId id) const { return nodes_.at(id); }
  const std::vector<Node>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }

  /// Ancestor of `id` that is a direct child of the root (or `id` itself).
  std::optional<TreeNodeId> first_level_ancestor(TreeNodeId id) const;

 private:
  std::vector<Node> nodes_;
};

}  // namespace sgr
