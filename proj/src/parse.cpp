#include "hforge/parse.hpp"

#include <cctype>

namespace hforge {

namespace {

struct Parser {
  const ChartPtr& chart;
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw engine_error("parse", msg + " at position " + std::to_string(pos));
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  Fe parse() {
    Fe e = expr();
    skip_ws();
    if (pos != s.size()) fail("trailing input");
    return e;
  }

  Fe expr() {
    Fe e = term();
    while (true) {
      if (eat('+')) {
        e = e + term();
      } else if (eat('-')) {
        e = e - term();
      } else {
        return e;
      }
    }
  }

  Fe term() {
    Fe e = factor();
    while (true) {
      if (eat('*')) {
        e = e * factor();
      } else if (eat('/')) {
        e = e / factor();
      } else {
        return e;
      }
    }
  }

  Fe factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    Fe base = atom();
    if (eat('^')) {
      bool neg = eat('-');
      long k = integer();
      return base.pow(static_cast<int>(neg ? -k : k));
    }
    return base;
  }

  long integer() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected integer");
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      ++pos;
    }
    return v;
  }

  Fe atom() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Fe e = expr();
      if (!eat(')')) fail("unbalanced parentheses");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long v = integer();
      return Fe::integer(chart, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return ident();
    fail(std::string("unexpected character '") + c + "'");
  }

  Fe ident() {
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      // stop before a partial-derivative marker "_{("
      if (s[pos] == '_' && pos + 1 < s.size() && s[pos + 1] == '{') break;
      ++pos;
    }
    std::string name = s.substr(start, pos - start);
    std::vector<int> partials;
    if (pos + 2 < s.size() && s[pos] == '_' && s[pos + 1] == '{' && s[pos + 2] == '(') {
      pos += 3;
      while (true) {
        partials.push_back(static_cast<int>(integer()));
        if (eat(',')) continue;
        break;
      }
      if (!(eat(')') && eat('}'))) fail("malformed partial-derivative marker");
    }
    skip_ws();
    if (peek() == '(') {
      if (chart->function_arity(name) < 0) fail("undeclared symbol '" + name + "'");
      eat('(');
      std::vector<Fe> args;
      if (peek() != ')') {
        args.push_back(expr());
        while (eat(',')) args.push_back(expr());
      }
      if (!eat(')')) fail("unbalanced parentheses");
      VarId v = intern_atom(chart, name, std::move(partials), std::move(args));
      return Fe::from_poly(chart, Poly::variable(v));
    }
    if (!partials.empty()) fail("partial-derivative marker without arguments");
    VarId v = SymbolTable::instance().intern(name);
    if (!chart->declares(v)) fail("undeclared symbol '" + name + "'");
    return Fe::from_poly(chart, Poly::variable(v));
  }
};

}  // namespace

FieldElement parse_expression(const ChartPtr& chart, const std::string& text) {
  Parser p{chart, text};
  return p.parse();
}

}  // namespace hforge
