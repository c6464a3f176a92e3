#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sgr/random.hpp"
#include "sgr/strategy.hpp"
#include "sgr/subgraph.hpp"

namespace sgr {

using SubgraphFunction = std::function<Subgraph(const LocatedGraph&)>;

/// Named subgraph functions usable as property((Function, name), F).
class FunctionRegistry {
 public:
  /// Throws DuplicateFunction.
  void register_builtin(const std::string& name, SubgraphFunction fn);
  bool contains(const std::string& name) const { return fns_.count(name) != 0; }
  /// Throws UnknownFunction.
  const SubgraphFunction& get(const std::string& name) const;
  std::vector<std::string> names() const;

  /// Registry with the stock functions: `root` (the lowest-id node),
  /// `leaves` (nodes of degree 1) and `isolated` (nodes of degree 0).
  static FunctionRegistry with_builtins();
  static const std::vector<std::string>& builtin_names();
  /// Registers one stock function by name; false if unknown.
  bool enable_builtin(const std::string& name);

 private:
  std::map<std::string, SubgraphFunction> fns_;
};

/// Evaluates a focusing expression against `g`. Neighbour results hold nodes
/// only. Only OneNgb draws from `rng` (one draw per evaluation, none when it
/// has no candidates).
Subgraph eval_focus(const Focus& f, const LocatedGraph& g,
                    const FunctionRegistry& registry, Rng& rng);

/// Filters `base` by `rho`; the result is always contained in `base`.
Subgraph eval_property(const PropertyExpr& rho, const Subgraph& base,
                       const LocatedGraph& g, const FunctionRegistry& registry);

/// Immediate successors of `sources`; with `port_label` set, only edges at
/// that port of the source are followed.
NodeSet neighbour_nodes(const PortGraph& g, const NodeSet& sources,
                        const std::string* port_label = nullptr);

}  // namespace sgr
