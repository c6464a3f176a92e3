#include <cctype>
#include <charconv>
#include <cmath>

#include "sgr/error.hpp"
#include "sgr/strategy.hpp"

namespace sgr {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += i + 1 == items.size() ? " or " : ", ";
    out += items[i];
  }
  return out;
}

}  // namespace

SyntaxError::SyntaxError(int line, int column, std::vector<std::string> expected,
                         const std::string& found)
    : Error(Errc::SyntaxError, std::to_string(line) + ":" + std::to_string(column) +
                                   ": expected " + join(expected) + ", found " +
                                   found),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { Ident, Number, String, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int column = 1;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::String: return "string \"" + t.text + "\"";
    default: return "'" + t.text + "'";
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.line = line_;
      t.column = col_;
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Tok::Ident;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
          t.text += take();
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '-' && pos_ + 1 < src_.size() &&
                  (std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])) ||
                   src_[pos_ + 1] == '.')) ||
                 (c == '.' && pos_ + 1 < src_.size() &&
                  std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
        t.kind = Tok::Number;
        t.text += take();
        while (pos_ < src_.size()) {
          char d = src_[pos_];
          if (std::isdigit(static_cast<unsigned char>(d)) || d == '.' || d == 'e' ||
              d == 'E') {
            t.text += take();
          } else if ((d == '-' || d == '+') &&
                     (t.text.back() == 'e' || t.text.back() == 'E')) {
            t.text += take();
          } else {
            break;
          }
        }
      } else if (c == '"') {
        t.kind = Tok::String;
        take();
        for (;;) {
          if (pos_ >= src_.size())
            throw SyntaxError(t.line, t.column, {"closing '\"'"}, "end of input");
          char d = take();
          if (d == '"') break;
          if (d == '\\' && pos_ < src_.size()) d = take();
          t.text += d;
        }
      } else {
        t.kind = Tok::Punct;
        std::string_view two = src_.substr(pos_, 2);
        if (two == "==" || two == "!=" || two == ">=" || two == "<=") {
          t.text += take();
          t.text += take();
        } else if (std::string_view("(),;+&\\<>").find(c) != std::string_view::npos) {
          t.text += take();
        } else {
          throw SyntaxError(t.line, t.column, {"a token"},
                            "'" + std::string(1, c) + "'");
        }
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char take() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') take();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

const std::set<std::string>& keywords() {
  static const std::set<std::string> k = {
      "id",     "fail",   "all",     "one",   "while",   "do",       "if",
      "then",   "else",   "orelse",  "repeat", "ppick",  "setPos",   "setBan",
      "isEmpty", "not",   "CrtGraph", "CrtPos", "CrtBan", "AllNgb",  "OneNgb",
      "NextNgb", "property", "emptySet", "Node", "Edge", "Port", "Function",
      "Label", "true", "false"};
  return k;
}

class Parser {
 public:
  Parser(std::string_view text, const std::set<std::string>* rules)
      : tokens_(Lexer(text).run()), rules_(rules) {}

  StrategyPtr parse_program() {
    auto s = parse_seq();
    expect_end();
    return s;
  }

  FocusPtr parse_focus_only() {
    auto f = parse_focus();
    expect_end();
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool at_punct(std::string_view p) const {
    return peek().kind == Tok::Punct && peek().text == p;
  }
  bool at_ident(std::string_view w) const {
    return peek().kind == Tok::Ident && peek().text == w;
  }
  Token next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw SyntaxError(peek().line, peek().column, std::move(expected),
                      describe(peek()));
  }

  void expect_punct(std::string_view p) {
    if (!at_punct(p)) fail({"'" + std::string(p) + "'"});
    next();
  }
  void expect_word(std::string_view w) {
    if (!at_ident(w)) fail({"'" + std::string(w) + "'"});
    next();
  }
  void expect_end() {
    if (peek().kind != Tok::End) fail({"';'", "end of input"});
  }

  std::string expect_name(const char* what) {
    if (peek().kind != Tok::Ident || keywords().count(peek().text)) fail({what});
    return next().text;
  }

  std::string rule_name() {
    const Token at = peek();
    std::string name = expect_name("a rule name");
    if (rules_ && !rules_->count(name))
      throw Error(Errc::UnknownRule, std::to_string(at.line) + ":" +
                                         std::to_string(at.column) +
                                         ": unknown rule '" + name + "'");
    return name;
  }

  double number() {
    if (peek().kind != Tok::Number) fail({"a number"});
    const Token t = next();
    double v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
      throw SyntaxError(t.line, t.column, {"a number"}, describe(t));
    return v;
  }

  StrategyPtr parenthesized_seq() {
    expect_punct("(");
    auto s = parse_seq();
    expect_punct(")");
    return s;
  }

  StrategyPtr parse_seq() {
    auto first = parse_orelse();
    if (at_punct(";")) {
      next();
      return make::seq(first, parse_seq());
    }
    return first;
  }

  StrategyPtr parse_orelse() {
    auto left = parse_primary();
    while (at_ident("orelse")) {
      next();
      left = make::or_else(left, parenthesized_seq());
    }
    return left;
  }

  StrategyPtr parse_primary() {
    if (at_punct("(")) return parenthesized_seq();
    if (peek().kind != Tok::Ident)
      fail({"a strategy"});
    const std::string word = peek().text;
    if (word == "id") { next(); return make::id(); }
    if (word == "fail") { next(); return make::fail(); }
    if (word == "all" || word == "one") {
      next();
      expect_punct("(");
      auto name = rule_name();
      expect_punct(")");
      return word == "all" ? make::all(name) : make::one(name);
    }
    if (word == "while") {
      next();
      auto c = parenthesized_seq();
      expect_word("do");
      return make::while_do(c, parenthesized_seq());
    }
    if (word == "if") {
      next();
      auto c = parenthesized_seq();
      expect_word("then");
      auto t = parenthesized_seq();
      if (at_ident("else")) {
        next();
        return make::if_then_else(c, t, parenthesized_seq());
      }
      return make::if_then_else(c, t, make::id());
    }
    if (word == "repeat") { next(); return make::repeat(parenthesized_seq()); }
    if (word == "not") { next(); return make::not_(parenthesized_seq()); }
    if (word == "ppick") return parse_ppick();
    if (word == "setPos" || word == "setBan" || word == "isEmpty") {
      next();
      expect_punct("(");
      auto f = parse_focus();
      expect_punct(")");
      if (word == "setPos") return make::set_pos(f);
      if (word == "setBan") return make::set_ban(f);
      return make::is_empty(f);
    }
    if (keywords().count(word)) fail({"a strategy"});
    return make::one(rule_name());
  }

  StrategyPtr parse_ppick() {
    const Token at = next();
    expect_punct("(");
    std::vector<std::pair<StrategyPtr, double>> branches;
    for (;;) {
      auto s = parse_seq();
      expect_punct(",");
      double p = number();
      branches.emplace_back(s, p);
      if (at_punct(")")) break;
      expect_punct(",");
    }
    next();
    double sum = 0;
    for (const auto& [s, p] : branches) {
      if (!(p >= 0.0 && p <= 1.0))
        throw Error(Errc::BadProbabilities,
                    std::to_string(at.line) + ":" + std::to_string(at.column) +
                        ": ppick probability out of [0,1]");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
      throw Error(Errc::BadProbabilities,
                  std::to_string(at.line) + ":" + std::to_string(at.column) +
                      ": ppick probabilities sum to " + std::to_string(sum) +
                      ", not 1");
    return make::ppick(std::move(branches));
  }

  // ---- focusing ----

  FocusPtr parse_focus() {
    auto left = parse_focus_term();
    for (;;) {
      if (at_punct("+")) {
        next();
        left = make::set_union(left, parse_focus_term());
      } else if (at_punct("&")) {
        next();
        left = make::set_intersection(left, parse_focus_term());
      } else if (at_punct("\\")) {
        next();
        left = make::set_difference(left, parse_focus_term());
      } else {
        return left;
      }
    }
  }

  FocusPtr focus_arg() {
    expect_punct("(");
    auto f = parse_focus();
    expect_punct(")");
    return f;
  }

  FocusPtr parse_focus_term() {
    if (at_punct("(")) return focus_arg();
    static const std::vector<std::string> expected = {
        "CrtGraph", "CrtPos", "CrtBan", "AllNgb", "OneNgb", "NextNgb",
        "property", "emptySet", "'('"};
    if (peek().kind != Tok::Ident) fail(expected);
    const std::string word = peek().text;
    if (word == "CrtGraph") { next(); return make::crt_graph(); }
    if (word == "CrtPos") { next(); return make::crt_pos(); }
    if (word == "CrtBan") { next(); return make::crt_ban(); }
    if (word == "emptySet") { next(); return make::empty_set(); }
    if (word == "AllNgb") { next(); return make::all_ngb(focus_arg()); }
    if (word == "OneNgb") { next(); return make::one_ngb(focus_arg()); }
    if (word == "NextNgb") { next(); return make::next_ngb(focus_arg()); }
    if (word == "property") {
      next();
      expect_punct("(");
      auto rho = parse_property();
      expect_punct(",");
      auto f = parse_focus();
      expect_punct(")");
      return make::property(std::move(rho), f);
    }
    fail(expected);
  }

  PropertyExpr parse_property() {
    expect_punct("(");
    if (at_ident("Function")) {
      next();
      expect_punct(",");
      auto name = expect_name("a function name");
      expect_punct(")");
      return FunctionProperty{name};
    }
    ElemProperty p;
    if (at_ident("Node")) p.elem = Elem::Node;
    else if (at_ident("Edge")) p.elem = Elem::Edge;
    else if (at_ident("Port")) p.elem = Elem::Port;
    else fail({"Node", "Edge", "Port", "Function"});
    next();
    expect_punct(",");
    if (at_ident("Label")) {
      next();
      p.test.lhs = LabelRef{};
      if (at_punct("==")) p.test.op = Relop::Eq;
      else if (at_punct("!=")) p.test.op = Relop::Ne;
      else fail({"'=='", "'!='"});
      next();
      p.test.rhs = literal();
    } else {
      p.test.lhs = AttrRef{expect_name("an attribute name")};
      p.test.op = relop();
      if (peek().kind == Tok::Ident && !at_ident("true") && !at_ident("false"))
        p.test.rhs = AttrRef{expect_name("an attribute name or a literal")};
      else
        p.test.rhs = literal();
    }
    expect_punct(")");
    return p;
  }

  Relop relop() {
    static const std::vector<std::pair<const char*, Relop>> ops = {
        {"==", Relop::Eq}, {"!=", Relop::Ne}, {">=", Relop::Ge},
        {"<=", Relop::Le}, {">", Relop::Gt},  {"<", Relop::Lt}};
    for (const auto& [text, op] : ops)
      if (at_punct(text)) {
        next();
        return op;
      }
    fail({"'=='", "'!='", "'>'", "'<'", "'>='", "'<='"});
  }

  AttributeValue literal() {
    if (peek().kind == Tok::String) return next().text;
    if (at_ident("true")) { next(); return true; }
    if (at_ident("false")) { next(); return false; }
    if (peek().kind == Tok::Number) {
      const Token t = next();
      const char* b = t.text.data();
      const char* e = b + t.text.size();
      if (t.text.find_first_of(".eE") == std::string::npos) {
        std::int64_t i = 0;
        auto [ptr, ec] = std::from_chars(b, e, i);
        if (ec == std::errc() && ptr == e) return i;
      } else {
        double d = 0;
        auto [ptr, ec] = std::from_chars(b, e, d);
        if (ec == std::errc() && ptr == e) return d;
      }
      throw SyntaxError(t.line, t.column, {"a number"}, describe(t));
    }
    fail({"a string", "a number", "true", "false"});
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const std::set<std::string>* rules_;
};

}  // namespace

StrategyPtr parse_strategy(std::string_view text,
                           const std::set<std::string>& rule_names) {
  return Parser(text, &rule_names).parse_program();
}

StrategyPtr parse_strategy(std::string_view text) {
  return Parser(text, nullptr).parse_program();
}

FocusPtr parse_focus(std::string_view text) {
  return Parser(text, nullptr).parse_focus_only();
}

}  // namespace sgr
