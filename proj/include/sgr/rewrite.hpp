#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgr/matcher.hpp"
#include "sgr/subgraph.hpp"

namespace sgr {

/// How an arrow-node port rewires the edges that cross the boundary of the
/// matched left-hand side.
enum class ArrowPortType { Bridge, Blackhole, Wire };

std::string_view to_string(ArrowPortType t);
std::optional<ArrowPortType> parse_arrow_port_type(std::string_view s);

struct ArrowPort {
  ArrowPortType type = ArrowPortType::Bridge;
  std::vector<PortRef> lhs_edges;  // ports of L
  std::vector<PortRef> rhs_edges;  // ports of R
};

struct RewriteRule {
  std::string name;
  GraphPtr lhs;
  GraphPtr rhs;
  std::vector<ArrowPort> arrow;
};

/// L_W => R_M^N. Unset `m` means M = R, unset `n` means N is empty, unset
/// `w` means "g(L) overlaps P".
struct LocatedRule {
  RewriteRule rule;
  std::optional<Subgraph> w;
  std::optional<Subgraph> m;
  std::optional<Subgraph> n;

  const std::string& name() const { return rule.name; }
};

enum class ViolationKind {
  BridgeLhsArity,
  BridgeMissingRhs,
  BlackholeMissingLhs,
  BlackholeHasRhs,
  WireLhsArity,
  WireHasRhs,
  UnknownLhsPort,
  UnknownRhsPort,
  LhsPortWiredTwice,
  FreeRhsVariable,
  WNotInLhs,
  MNotInRhs,
  NNotInRhs,
  MNOverlap,
};

struct RuleViolation {
  ViolationKind kind;
  /// Index into `RewriteRule::arrow`, if the violation concerns an arrow port.
  std::optional<std::size_t> arrow_port;
  std::string message;
};

/// Arrow-port conditions, port existence and RHS variable scoping.
std::vector<RuleViolation> validate_rule(const RewriteRule& rule);
/// `validate_rule` plus the W/M/N constraints.
std::vector<RuleViolation> validate_rule(const LocatedRule& rule);

struct LegalReduct {
  Morphism morphism;
  LocatedGraph reduct;
};
using LegalSet = std::vector<LegalReduct>;

/// Morphisms of L into G satisfying the position/banned conditions, in
/// matcher order.
std::vector<Morphism> legal_morphisms(const LocatedRule& rule,
                                      const LocatedGraph& g);

bool is_legal(const LocatedRule& rule, const LocatedGraph& g, const Morphism& m);

LegalSet legal_reducts(const LocatedRule& rule, const LocatedGraph& g);

/// Replaces g(L) by a fresh instance of R, rewires boundary edges through the
/// arrow ports and updates P and Q. Throws IllegalMorphism or
/// UnwiredBoundaryEdge.
LocatedGraph apply_at(const LocatedRule& rule, const LocatedGraph& g,
                      const Morphism& m);

}  // namespace sgr
