#include "sgr/attribute.hpp"

#include <charconv>
#include <cmath>

#include "sgr/error.hpp"

namespace sgr {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::DanglingEdge: return "DanglingEdge";
    case Errc::DuplicatePortLabel: return "DuplicatePortLabel";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::ParentMismatch: return "ParentMismatch";
    case Errc::HostContainsVariables: return "HostContainsVariables";
    case Errc::IllegalMorphism: return "IllegalMorphism";
    case Errc::UnwiredBoundaryEdge: return "UnwiredBoundaryEdge";
    case Errc::InvalidRule: return "InvalidRule";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownRule: return "UnknownRule";
    case Errc::BadProbabilities: return "BadProbabilities";
    case Errc::UnknownFunction: return "UnknownFunction";
    case Errc::DuplicateFunction: return "DuplicateFunction";
    case Errc::LimitExceeded: return "LimitExceeded";
    case Errc::Diverged: return "Diverged";
    case Errc::Stuck: return "Stuck";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::InputError: return "InputError";
  }
  return "Unknown";
}

bool has_variables(const Attributes& attrs) {
  for (const auto& [key, value] : attrs)
    if (is_variable(value)) return true;
  return false;
}

AttributeValue to_value(const Label& label) {
  if (const auto* s = std::get_if<std::string>(&label)) return *s;
  return std::get<Variable>(label);
}

namespace {

std::optional<double> numeric(const AttributeValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v))
    return static_cast<double>(*i);
  if (const auto* d = std::get_if<double>(&v)) return *d;
  return std::nullopt;
}

template <typename T>
bool apply(const T& a, Relop op, const T& b) {
  switch (op) {
    case Relop::Eq: return a == b;
    case Relop::Ne: return a != b;
    case Relop::Gt: return a > b;
    case Relop::Lt: return a < b;
    case Relop::Ge: return a >= b;
    case Relop::Le: return a <= b;
  }
  return false;
}

}  // namespace

bool compare(const AttributeValue& lhs, Relop op, const AttributeValue& rhs) {
  if (is_variable(lhs) || is_variable(rhs)) return false;
  if (lhs.index() == rhs.index()) {
    if (const auto* a = std::get_if<std::int64_t>(&lhs))
      return apply(*a, op, std::get<std::int64_t>(rhs));
    if (const auto* a = std::get_if<std::string>(&lhs))
      return apply(*a, op, std::get<std::string>(rhs));
    if (const auto* a = std::get_if<bool>(&lhs)) {
      if (op != Relop::Eq && op != Relop::Ne) return false;
      return apply(*a, op, std::get<bool>(rhs));
    }
  }
  auto a = numeric(lhs);
  auto b = numeric(rhs);
  if (a && b) return apply(*a, op, *b);
  return false;
}

bool values_equal(const AttributeValue& a, const AttributeValue& b) {
  if (a.index() == b.index()) return a == b;
  auto x = numeric(a);
  auto y = numeric(b);
  return x && y && *x == *y;
}

bool unify(const AttributeValue& pattern, const AttributeValue& host,
           Binding& binding) {
  if (const auto* var = std::get_if<Variable>(&pattern)) {
    auto it = binding.find(var->name);
    if (it == binding.end()) {
      binding.emplace(var->name, host);
      return true;
    }
    return it->second == host;
  }
  return values_equal(pattern, host);
}

bool unify(const Label& pattern, const Label& host, Binding& binding) {
  return unify(to_value(pattern), to_value(host), binding);
}

AttributeValue substitute(const AttributeValue& v, const Binding& binding) {
  if (const auto* var = std::get_if<Variable>(&v)) {
    auto it = binding.find(var->name);
    if (it != binding.end()) return it->second;
  }
  return v;
}

Label substitute_label(const Label& l, const Binding& binding) {
  if (const auto* var = std::get_if<Variable>(&l)) {
    auto it = binding.find(var->name);
    if (it == binding.end()) return l;
    if (const auto* s = std::get_if<std::string>(&it->second)) return *s;
    return to_string(it->second);
  }
  return l;
}

namespace {

std::string format_double(double d) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, d);
  std::string out(buf, end);
  if (std::isfinite(d) &&
      out.find_first_of(".eE") == std::string::npos)
    out += ".0";
  return out;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_string(const AttributeValue& v) {
  struct Visitor {
    std::string operator()(const std::string& s) const { return quote(s); }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(double d) const { return format_double(d); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const Variable& x) const { return "$" + x.name; }
  };
  return std::visit(Visitor{}, v);
}

std::string to_string(const Label& l) {
  if (const auto* s = std::get_if<std::string>(&l)) return *s;
  return "$" + std::get<Variable>(l).name;
}

std::string to_string(Relop op) {
  switch (op) {
    case Relop::Eq: return "==";
    case Relop::Ne: return "!=";
    case Relop::Gt: return ">";
    case Relop::Lt: return "<";
    case Relop::Ge: return ">=";
    case Relop::Le: return "<=";
  }
  return "?";
}

}  // namespace sgr
