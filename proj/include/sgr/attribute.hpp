#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>

namespace sgr {

/// A pattern variable. Only rule graphs may contain variables.
struct Variable {
  std::string name;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

using AttributeValue =
    std::variant<std::string, std::int64_t, double, bool, Variable>;

/// Names of nodes, labels of ports and edges.
using Label = std::variant<std::string, Variable>;

using Attributes = std::map<std::string, AttributeValue>;

/// Variable name -> value. Node names bound by a variable are stored as
/// string values.
using Binding = std::map<std::string, AttributeValue>;

enum class Relop { Eq, Ne, Gt, Lt, Ge, Le };

inline bool is_variable(const AttributeValue& v) {
  return std::holds_alternative<Variable>(v);
}
inline bool is_variable(const Label& l) {
  return std::holds_alternative<Variable>(l);
}
bool has_variables(const Attributes& attrs);

AttributeValue to_value(const Label& label);

/// Compares two concrete values. Integers are promoted when compared with
/// floats; strings order lexicographically; booleans only support == and
/// !=. Any other pairing (or a variable on either side) yields false.
bool compare(const AttributeValue& lhs, Relop op, const AttributeValue& rhs);

/// Equality used by matching: numeric kinds unify, otherwise kind and value
/// must agree.
bool values_equal(const AttributeValue& a, const AttributeValue& b);

/// Unifies a pattern value with a concrete host value under `binding`,
/// extending it for unbound variables. Returns false on mismatch (the binding
/// may then be partially extended and should be discarded).
bool unify(const AttributeValue& pattern, const AttributeValue& host,
           Binding& binding);
bool unify(const Label& pattern, const Label& host, Binding& binding);

/// Replaces variables by their bound values. Unbound variables are left as
/// they are.
AttributeValue substitute(const AttributeValue& v, const Binding& binding);
Label substitute_label(const Label& l, const Binding& binding);

std::string to_string(const AttributeValue& v);
std::string to_string(const Label& l);
std::string to_string(Relop op);

}  // namespace sgr
