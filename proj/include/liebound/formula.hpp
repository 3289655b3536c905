// Integer formulas for the parametric table rows ("n*(n-1)/2",
// "n%2==0 ? 2 : 1", "max(3, cdiv(n,p))").
//
// Grammar (C precedence): ternary ?: , || , && , comparisons, + -, * / %,
// unary - !, calls max(a,b) min(a,b) cdiv(a,b), identifiers, integers.
// Division floors; cdiv is ceiling division.

#pragma once

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace liebound {

using Bindings = std::map<std::string, long>;

class Formula {
public:
  explicit Formula(std::string text) : text_(std::move(text)) {}

  const std::string& text() const { return text_; }

  long eval(const Bindings& vars) const {
    Parser p{text_, 0, vars};
    const long v = p.ternary();
    p.skip();
    if (p.pos != text_.size()) p.error("trailing input");
    return v;
  }

  bool holds(const Bindings& vars) const { return eval(vars) != 0; }

private:
  struct Parser {
    std::string_view s;
    std::size_t pos;
    const Bindings& vars;

    [[noreturn]] void error(const std::string& what) const {
      throw std::invalid_argument("formula '" + std::string(s) + "': " + what + " at offset " +
                                  std::to_string(pos));
    }
    void skip() {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(std::string_view tok) {
      skip();
      if (s.substr(pos, tok.size()) == tok) {
        pos += tok.size();
        return true;
      }
      return false;
    }
    static long floor_div(long a, long b) {
      long q = a / b;
      if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
      return q;
    }

    long ternary() {
      const long c = logical_or();
      if (!eat("?")) return c;
      const long a = ternary();
      if (!eat(":")) error("expected ':'");
      const long b = ternary();
      return c ? a : b;
    }
    long logical_or() {
      long v = logical_and();
      while (eat("||")) {
        const long r = logical_and();
        v = (v || r) ? 1 : 0;
      }
      return v;
    }
    long logical_and() {
      long v = comparison();
      while (eat("&&")) {
        const long r = comparison();
        v = (v && r) ? 1 : 0;
      }
      return v;
    }
    long comparison() {
      const long a = additive();
      if (eat("==")) return a == additive();
      if (eat("!=")) return a != additive();
      if (eat("<=")) return a <= additive();
      if (eat(">=")) return a >= additive();
      if (eat("<")) return a < additive();
      if (eat(">")) return a > additive();
      return a;
    }
    long additive() {
      long v = multiplicative();
      while (true) {
        if (eat("+")) v += multiplicative();
        else if (eat("-")) v -= multiplicative();
        else return v;
      }
    }
    long multiplicative() {
      long v = unary();
      while (true) {
        if (eat("*")) {
          v *= unary();
        } else if (eat("/")) {
          const long d = unary();
          if (d == 0) error("division by zero");
          v = floor_div(v, d);
        } else if (eat("%")) {
          const long d = unary();
          if (d == 0) error("division by zero");
          v = v - d * floor_div(v, d);
        } else {
          return v;
        }
      }
    }
    long unary() {
      skip();
      if (pos < s.size() && s[pos] == '!' && s.substr(pos, 2) != "!=") {
        ++pos;
        return unary() == 0;
      }
      if (eat("-")) return -unary();
      return primary();
    }
    long primary() {
      skip();
      if (pos >= s.size()) error("unexpected end");
      if (eat("(")) {
        const long v = ternary();
        if (!eat(")")) error("expected ')'");
        return v;
      }
      if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) v = v * 10 + (s[pos++] - '0');
        return v;
      }
      if (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_') {
        const std::size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
        const std::string name(s.substr(start, pos - start));
        if (eat("(")) {
          const long a = ternary();
          if (!eat(",")) error("expected ',' in call to " + name);
          const long b = ternary();
          if (!eat(")")) error("expected ')' in call to " + name);
          if (name == "max") return std::max(a, b);
          if (name == "min") return std::min(a, b);
          if (name == "cdiv") {
            if (b == 0) error("division by zero");
            return -floor_div(-a, b);
          }
          error("unknown function " + name);
        }
        auto it = vars.find(name);
        if (it == vars.end()) error("unbound variable " + name);
        return it->second;
      }
      error("unexpected character");
    }
  };

  std::string text_;
};

}  // namespace liebound
