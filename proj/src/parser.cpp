/*
 * (C) Copyright 2026 zmc authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <cctype>
#include <cstdlib>
#include <string>

#include "zmc/error.hpp"
#include "zmc/expr.hpp"

// Recursive-descent parser for the descriptor expression grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | power
//   power  := atom ('^' intexp)?
//   intexp := ['-'] digits | '(' ['-'] digits ')'
//   atom   := number | 'i' | 'z' | func '(' expr ')' | ident | '(' expr ')'

namespace zmc {

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

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

  [[noreturn]] void error(const std::string& msg) {
    fail(Errc::ParseError, msg + " at position " + std::to_string(pos) + " in \"" + s + "\"");
  }

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos != s.size()) error("unexpected trailing input");
    return e;
  }

  Expr expr() {
    Expr e = term();
    for (;;) {
      if (eat('+'))
        e = e + term();
      else if (eat('-'))
        e = e - term();
      else
        return e;
    }
  }

  Expr term() {
    Expr e = factor();
    for (;;) {
      if (eat('*'))
        e = e * factor();
      else if (eat('/'))
        e = e / factor();
      else
        return e;
    }
  }

  Expr factor() {
    if (eat('-')) return -factor();
    return power();
  }

  Expr power() {
    Expr e = atom();
    if (eat('^')) {
      int n = int_exponent();
      if (n == 0) error("pow exponent must be a nonzero integer");
      e = pow(e, n);
    }
    return e;
  }

  int int_exponent() {
    skip_ws();
    bool paren = eat('(');
    bool neg = eat('-');
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      error("expected integer exponent");
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1000) error("exponent too large");
      ++pos;
    }
    if (paren && !eat(')')) error("expected ')' after exponent");
    return static_cast<int>(neg ? -v : v);
  }

  Expr atom() {
    skip_ws();
    if (pos >= s.size()) error("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Expr e = expr();
      if (!eat(')')) error("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    error("unexpected character");
  }

  Expr number() {
    size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.'))
      ++pos;
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
      size_t save = pos;
      ++pos;
      if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      } else {
        pos = save; // 'e' belongs to something else
      }
    }
    std::string tok = s.substr(start, pos - start);
    char* end = nullptr;
    double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0') error("bad number \"" + tok + "\"");
    return Expr::constant(cplx(v, 0.0));
  }

  Expr identifier() {
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    std::string name = s.substr(start, pos - start);
    if (name == "z") return Expr::var();
    if (name == "i") return Expr::constant(cplx(0, 1));
    static const char* funcs[] = {"exp", "log", "sin", "cos", "sinh", "cosh"};
    for (const char* f : funcs) {
      if (name == f) {
        if (!eat('(')) error("expected '(' after " + name);
        Expr arg = expr();
        if (!eat(')')) error("expected ')' after " + name + " argument");
        if (name == "exp") return zmc::exp(arg);
        if (name == "log") return zmc::log(arg);
        if (name == "sin") return zmc::sin(arg);
        if (name == "cos") return zmc::cos(arg);
        if (name == "sinh") return zmc::sinh(arg);
        return zmc::cosh(arg);
      }
    }
    return Expr::param(name);
  }
};

} // namespace

Expr parse_expr(const std::string& text) {
  Parser p(text);
  return p.parse();
}

} // namespace zmc
