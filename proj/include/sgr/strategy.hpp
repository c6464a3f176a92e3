#pragma once

#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "sgr/attribute.hpp"

namespace sgr {

/// Immutable shared pointer with structural equality.
template <typename T>
class Box {
 public:
  Box() = default;
  Box(T value) : ptr_(std::make_shared<const T>(std::move(value))) {}

  const T& operator*() const { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }
  const T* get() const { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) {
    if (a.ptr_ == b.ptr_) return true;
    if (!a.ptr_ || !b.ptr_) return false;
    return *a.ptr_ == *b.ptr_;
  }

 private:
  std::shared_ptr<const T> ptr_;
};

// ---- property sublanguage ----

enum class Elem { Node, Edge, Port };

/// Left side of a comparison: the element's own label or a named attribute.
struct LabelRef {
  friend bool operator==(const LabelRef&, const LabelRef&) = default;
};
struct AttrRef {
  std::string name;
  friend bool operator==(const AttrRef&, const AttrRef&) = default;
};

struct Comparison {
  std::variant<LabelRef, AttrRef> lhs;
  Relop op = Relop::Eq;
  /// A literal, or another attribute of the same element.
  std::variant<AttributeValue, AttrRef> rhs;
  friend bool operator==(const Comparison&, const Comparison&) = default;
};

struct ElemProperty {
  Elem elem = Elem::Node;
  Comparison test;
  friend bool operator==(const ElemProperty&, const ElemProperty&) = default;
};

struct FunctionProperty {
  std::string name;
  friend bool operator==(const FunctionProperty&, const FunctionProperty&) = default;
};

using PropertyExpr = std::variant<ElemProperty, FunctionProperty>;

// ---- focusing expressions ----

struct Focus;
using FocusPtr = Box<Focus>;

namespace focus {
struct CrtGraph { friend bool operator==(const CrtGraph&, const CrtGraph&) = default; };
struct CrtPos { friend bool operator==(const CrtPos&, const CrtPos&) = default; };
struct CrtBan { friend bool operator==(const CrtBan&, const CrtBan&) = default; };
struct EmptySet { friend bool operator==(const EmptySet&, const EmptySet&) = default; };
struct AllNgb { FocusPtr arg; friend bool operator==(const AllNgb&, const AllNgb&) = default; };
struct OneNgb { FocusPtr arg; friend bool operator==(const OneNgb&, const OneNgb&) = default; };
struct NextNgb { FocusPtr arg; friend bool operator==(const NextNgb&, const NextNgb&) = default; };
struct Property {
  PropertyExpr rho;
  FocusPtr arg;
  friend bool operator==(const Property&, const Property&) = default;
};
enum class SetOp { Union, Intersection, Difference };
struct Binary {
  SetOp op;
  FocusPtr lhs;
  FocusPtr rhs;
  friend bool operator==(const Binary&, const Binary&) = default;
};
}  // namespace focus

struct Focus {
  std::variant<focus::CrtGraph, focus::CrtPos, focus::CrtBan, focus::EmptySet,
               focus::AllNgb, focus::OneNgb, focus::NextNgb, focus::Property,
               focus::Binary>
      node;
  friend bool operator==(const Focus&, const Focus&) = default;
};

// ---- strategies ----

struct Strategy;
using StrategyPtr = Box<Strategy>;

namespace strat {
struct Id { friend bool operator==(const Id&, const Id&) = default; };
struct Fail { friend bool operator==(const Fail&, const Fail&) = default; };
struct All { std::string rule; friend bool operator==(const All&, const All&) = default; };
struct One { std::string rule; friend bool operator==(const One&, const One&) = default; };
struct Seq { StrategyPtr first, second; friend bool operator==(const Seq&, const Seq&) = default; };
struct While { StrategyPtr cond, body; friend bool operator==(const While&, const While&) = default; };
struct If {
  StrategyPtr cond, then_branch, else_branch;
  friend bool operator==(const If&, const If&) = default;
};
struct OrElse { StrategyPtr first, second; friend bool operator==(const OrElse&, const OrElse&) = default; };
struct Repeat { StrategyPtr body; friend bool operator==(const Repeat&, const Repeat&) = default; };
struct PPick {
  std::vector<std::pair<StrategyPtr, double>> branches;
  friend bool operator==(const PPick&, const PPick&) = default;
};
struct SetPos { FocusPtr focus; friend bool operator==(const SetPos&, const SetPos&) = default; };
struct SetBan { FocusPtr focus; friend bool operator==(const SetBan&, const SetBan&) = default; };
struct IsEmpty { FocusPtr focus; friend bool operator==(const IsEmpty&, const IsEmpty&) = default; };
}  // namespace strat

/// Strategy AST. `not(S)` has no node of its own: it is represented as
/// If(S, Fail, Id).
struct Strategy {
  std::variant<strat::Id, strat::Fail, strat::All, strat::One, strat::Seq,
               strat::While, strat::If, strat::OrElse, strat::Repeat,
               strat::PPick, strat::SetPos, strat::SetBan, strat::IsEmpty>
      node;
  friend bool operator==(const Strategy&, const Strategy&) = default;

  bool is_id() const { return std::holds_alternative<strat::Id>(node); }
  bool is_fail() const { return std::holds_alternative<strat::Fail>(node); }
  bool is_result() const { return is_id() || is_fail(); }
};

// Convenience constructors.
namespace make {
StrategyPtr id();
StrategyPtr fail();
StrategyPtr all(std::string rule);
StrategyPtr one(std::string rule);
StrategyPtr seq(StrategyPtr a, StrategyPtr b);
StrategyPtr while_do(StrategyPtr cond, StrategyPtr body);
StrategyPtr if_then_else(StrategyPtr c, StrategyPtr t, StrategyPtr e);
StrategyPtr not_(StrategyPtr s);
StrategyPtr or_else(StrategyPtr a, StrategyPtr b);
StrategyPtr repeat(StrategyPtr s);
StrategyPtr ppick(std::vector<std::pair<StrategyPtr, double>> branches);
StrategyPtr set_pos(FocusPtr f);
StrategyPtr set_ban(FocusPtr f);
StrategyPtr is_empty(FocusPtr f);

FocusPtr crt_graph();
FocusPtr crt_pos();
FocusPtr crt_ban();
FocusPtr empty_set();
FocusPtr all_ngb(FocusPtr f);
FocusPtr one_ngb(FocusPtr f);
FocusPtr next_ngb(FocusPtr f);
FocusPtr property(PropertyExpr rho, FocusPtr f);
FocusPtr set_union(FocusPtr a, FocusPtr b);
FocusPtr set_intersection(FocusPtr a, FocusPtr b);
FocusPtr set_difference(FocusPtr a, FocusPtr b);
}  // namespace make

/// Canonical text; `parse_strategy(print_strategy(s)) == s`.
std::string print_strategy(const Strategy& s);
std::string print_focus(const Focus& f);
std::string print_property(const PropertyExpr& rho);

/// Parses strategy text. A bare rule name means one(R); `not(S)` becomes
/// if(S)then(fail)else(id); `;` associates to the right; `#` starts a line
/// comment. Throws SyntaxError (with line:column and the expected tokens),
/// UnknownRule or BadProbabilities.
StrategyPtr parse_strategy(std::string_view text,
                           const std::set<std::string>& rule_names);
/// Same, without checking rule names.
StrategyPtr parse_strategy(std::string_view text);
FocusPtr parse_focus(std::string_view text);

/// Rule names referenced by all()/one().
std::set<std::string> referenced_rules(const Strategy& s);

enum class ConditionClass { Deterministic, NonDeterministic };

/// Membership in the deterministic condition grammar
///   Cond ::= Cond;Cond | id | fail | all(T) | isEmpty(F) | not(Cond)
/// with F built only from AllNgb, NextNgb, property, +, &, \ and emptySet.
ConditionClass classify_condition(const Strategy& s);

/// One message per if/while whose condition is not in the Cond grammar.
std::vector<std::string> condition_warnings(const Strategy& s);

}  // namespace sgr
