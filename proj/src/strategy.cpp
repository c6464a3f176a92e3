#include "sgr/strategy.hpp"

namespace sgr {

namespace make {
StrategyPtr id() { return Strategy{strat::Id{}}; }
StrategyPtr fail() { return Strategy{strat::Fail{}}; }
StrategyPtr all(std::string rule) { return Strategy{strat::All{std::move(rule)}}; }
StrategyPtr one(std::string rule) { return Strategy{strat::One{std::move(rule)}}; }
StrategyPtr seq(StrategyPtr a, StrategyPtr b) {
  return Strategy{strat::Seq{std::move(a), std::move(b)}};
}
StrategyPtr while_do(StrategyPtr cond, StrategyPtr body) {
  return Strategy{strat::While{std::move(cond), std::move(body)}};
}
StrategyPtr if_then_else(StrategyPtr c, StrategyPtr t, StrategyPtr e) {
  return Strategy{strat::If{std::move(c), std::move(t), std::move(e)}};
}
StrategyPtr not_(StrategyPtr s) { return if_then_else(std::move(s), fail(), id()); }
StrategyPtr or_else(StrategyPtr a, StrategyPtr b) {
  return Strategy{strat::OrElse{std::move(a), std::move(b)}};
}
StrategyPtr repeat(StrategyPtr s) { return Strategy{strat::Repeat{std::move(s)}}; }
StrategyPtr ppick(std::vector<std::pair<StrategyPtr, double>> branches) {
  return Strategy{strat::PPick{std::move(branches)}};
}
StrategyPtr set_pos(FocusPtr f) { return Strategy{strat::SetPos{std::move(f)}}; }
StrategyPtr set_ban(FocusPtr f) { return Strategy{strat::SetBan{std::move(f)}}; }
StrategyPtr is_empty(FocusPtr f) { return Strategy{strat::IsEmpty{std::move(f)}}; }

FocusPtr crt_graph() { return Focus{focus::CrtGraph{}}; }
FocusPtr crt_pos() { return Focus{focus::CrtPos{}}; }
FocusPtr crt_ban() { return Focus{focus::CrtBan{}}; }
FocusPtr empty_set() { return Focus{focus::EmptySet{}}; }
FocusPtr all_ngb(FocusPtr f) { return Focus{focus::AllNgb{std::move(f)}}; }
FocusPtr one_ngb(FocusPtr f) { return Focus{focus::OneNgb{std::move(f)}}; }
FocusPtr next_ngb(FocusPtr f) { return Focus{focus::NextNgb{std::move(f)}}; }
FocusPtr property(PropertyExpr rho, FocusPtr f) {
  return Focus{focus::Property{std::move(rho), std::move(f)}};
}
FocusPtr set_union(FocusPtr a, FocusPtr b) {
  return Focus{focus::Binary{focus::SetOp::Union, std::move(a), std::move(b)}};
}
FocusPtr set_intersection(FocusPtr a, FocusPtr b) {
  return Focus{focus::Binary{focus::SetOp::Intersection, std::move(a), std::move(b)}};
}
FocusPtr set_difference(FocusPtr a, FocusPtr b) {
  return Focus{focus::Binary{focus::SetOp::Difference, std::move(a), std::move(b)}};
}
}  // namespace make

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string print_literal(const AttributeValue& v) { return to_string(v); }

std::string print_comparison(const Comparison& c) {
  std::string out = std::visit(
      overloaded{[](const LabelRef&) { return std::string("Label"); },
                 [](const AttrRef& a) { return a.name; }},
      c.lhs);
  out += " " + to_string(c.op) + " ";
  out += std::visit(overloaded{[](const AttributeValue& v) { return print_literal(v); },
                               [](const AttrRef& a) { return a.name; }},
                    c.rhs);
  return out;
}

const char* elem_name(Elem e) {
  switch (e) {
    case Elem::Node: return "Node";
    case Elem::Edge: return "Edge";
    case Elem::Port: return "Port";
  }
  return "?";
}

}  // namespace

std::string print_property(const PropertyExpr& rho) {
  return std::visit(
      overloaded{[](const ElemProperty& p) {
                   return "(" + std::string(elem_name(p.elem)) + ", " +
                          print_comparison(p.test) + ")";
                 },
                 [](const FunctionProperty& f) { return "(Function, " + f.name + ")"; }},
      rho);
}

std::string print_focus(const Focus& f) {
  using namespace focus;
  return std::visit(
      overloaded{
          [](const CrtGraph&) { return std::string("CrtGraph"); },
          [](const CrtPos&) { return std::string("CrtPos"); },
          [](const CrtBan&) { return std::string("CrtBan"); },
          [](const EmptySet&) { return std::string("emptySet"); },
          [](const AllNgb& x) { return "AllNgb(" + print_focus(*x.arg) + ")"; },
          [](const OneNgb& x) { return "OneNgb(" + print_focus(*x.arg) + ")"; },
          [](const NextNgb& x) { return "NextNgb(" + print_focus(*x.arg) + ")"; },
          [](const Property& x) {
            return "property(" + print_property(x.rho) + ", " + print_focus(*x.arg) + ")";
          },
          [](const Binary& x) {
            const char* op = x.op == SetOp::Union          ? " + "
                             : x.op == SetOp::Intersection ? " & "
                                                           : " \\ ";
            std::string rhs = print_focus(*x.rhs);
            if (std::holds_alternative<Binary>(x.rhs->node)) rhs = "(" + rhs + ")";
            return print_focus(*x.lhs) + op + rhs;
          },
      },
      f.node);
}

std::string print_strategy(const Strategy& s) {
  using namespace strat;
  return std::visit(
      overloaded{
          [](const Id&) { return std::string("id"); },
          [](const Fail&) { return std::string("fail"); },
          [](const All& x) { return "all(" + x.rule + ")"; },
          [](const One& x) { return "one(" + x.rule + ")"; },
          [](const Seq& x) {
            std::string first = print_strategy(*x.first);
            if (std::holds_alternative<Seq>(x.first->node)) first = "(" + first + ")";
            return first + "; " + print_strategy(*x.second);
          },
          [](const While& x) {
            return "while(" + print_strategy(*x.cond) + ")do(" +
                   print_strategy(*x.body) + ")";
          },
          [](const If& x) {
            return "if(" + print_strategy(*x.cond) + ")then(" +
                   print_strategy(*x.then_branch) + ")else(" +
                   print_strategy(*x.else_branch) + ")";
          },
          [](const OrElse& x) {
            return "(" + print_strategy(*x.first) + ")orelse(" +
                   print_strategy(*x.second) + ")";
          },
          [](const Repeat& x) { return "repeat(" + print_strategy(*x.body) + ")"; },
          [](const PPick& x) {
            std::string out = "ppick(";
            for (std::size_t i = 0; i < x.branches.size(); ++i) {
              if (i) out += ", ";
              out += print_strategy(*x.branches[i].first) + ", " +
                     print_literal(x.branches[i].second);
            }
            return out + ")";
          },
          [](const SetPos& x) { return "setPos(" + print_focus(*x.focus) + ")"; },
          [](const SetBan& x) { return "setBan(" + print_focus(*x.focus) + ")"; },
          [](const IsEmpty& x) { return "isEmpty(" + print_focus(*x.focus) + ")"; },
      },
      s.node);
}

namespace {

void collect_rules(const Strategy& s, std::set<std::string>& out) {
  using namespace strat;
  std::visit(overloaded{
                 [&](const All& x) { out.insert(x.rule); },
                 [&](const One& x) { out.insert(x.rule); },
                 [&](const Seq& x) {
                   collect_rules(*x.first, out);
                   collect_rules(*x.second, out);
                 },
                 [&](const While& x) {
                   collect_rules(*x.cond, out);
                   collect_rules(*x.body, out);
                 },
                 [&](const If& x) {
                   collect_rules(*x.cond, out);
                   collect_rules(*x.then_branch, out);
                   collect_rules(*x.else_branch, out);
                 },
                 [&](const OrElse& x) {
                   collect_rules(*x.first, out);
                   collect_rules(*x.second, out);
                 },
                 [&](const Repeat& x) { collect_rules(*x.body, out); },
                 [&](const PPick& x) {
                   for (const auto& [b, p] : x.branches) collect_rules(*b, out);
                 },
                 [](const auto&) {},
             },
             s.node);
}

bool deterministic_focus(const Focus& f) {
  using namespace focus;
  return std::visit(overloaded{
                        [](const AllNgb& x) { return deterministic_focus(*x.arg); },
                        [](const NextNgb& x) { return deterministic_focus(*x.arg); },
                        [](const Property& x) { return deterministic_focus(*x.arg); },
                        [](const Binary& x) {
                          return deterministic_focus(*x.lhs) &&
                                 deterministic_focus(*x.rhs);
                        },
                        [](const EmptySet&) { return true; },
                        // The printed grammar has no base cases besides the
                        // empty set, so CrtGraph/CrtPos/CrtBan fall outside it.
                        [](const auto&) { return false; },
                    },
                    f.node);
}

bool in_cond(const Strategy& s) {
  using namespace strat;
  return std::visit(overloaded{
                        [](const Id&) { return true; },
                        [](const Fail&) { return true; },
                        [](const All&) { return true; },
                        [](const Seq& x) { return in_cond(*x.first) && in_cond(*x.second); },
                        [](const IsEmpty& x) { return deterministic_focus(*x.focus); },
                        [](const If& x) {
                          // not(Cond) is the only conditional in the grammar.
                          return x.then_branch->is_fail() && x.else_branch->is_id() &&
                                 in_cond(*x.cond);
                        },
                        [](const auto&) { return false; },
                    },
                    s.node);
}

void collect_warnings(const Strategy& s, std::vector<std::string>& out) {
  using namespace strat;
  auto check = [&](const StrategyPtr& cond, const char* construct) {
    if (!in_cond(*cond))
      out.push_back(std::string(construct) + " condition '" + print_strategy(*cond) +
                    "' is outside the deterministic condition sublanguage");
  };
  std::visit(overloaded{
                 [&](const Seq& x) {
                   collect_warnings(*x.first, out);
                   collect_warnings(*x.second, out);
                 },
                 [&](const While& x) {
                   check(x.cond, "while");
                   collect_warnings(*x.cond, out);
                   collect_warnings(*x.body, out);
                 },
                 [&](const If& x) {
                   check(x.cond, "if");
                   collect_warnings(*x.cond, out);
                   collect_warnings(*x.then_branch, out);
                   collect_warnings(*x.else_branch, out);
                 },
                 [&](const OrElse& x) {
                   collect_warnings(*x.first, out);
                   collect_warnings(*x.second, out);
                 },
                 [&](const Repeat& x) { collect_warnings(*x.body, out); },
                 [&](const PPick& x) {
                   for (const auto& [b, p] : x.branches) collect_warnings(*b, out);
                 },
                 [](const auto&) {},
             },
             s.node);
}

}  // namespace

std::set<std::string> referenced_rules(const Strategy& s) {
  std::set<std::string> out;
  collect_rules(s, out);
  return out;
}

ConditionClass classify_condition(const Strategy& s) {
  return in_cond(s) ? ConditionClass::Deterministic : ConditionClass::NonDeterministic;
}

std::vector<std::string> condition_warnings(const Strategy& s) {
  std::vector<std::string> out;
  collect_warnings(s, out);
  return out;
}

}  // namespace sgr
