#include "twinrep/scalar_io.hpp"

#include <cctype>
#include <sstream>

#include "twinrep/error.hpp"

namespace twinrep::exact {

std::string to_string(const Poly& p, const Ctx& ctx) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Int mag = t.coeff < 0 ? Int(-t.coeff) : t.coeff;
    if (first) {
      if (t.coeff < 0) out << "-";
      first = false;
    } else {
      out << (t.coeff < 0 ? " - " : " + ");
    }
    bool printed = false;
    if (mag != 1 || t.mono.is_one()) {
      out << mag.str();
      printed = true;
    }
    for (size_t v = 0; v < t.mono.exps.size(); v++) {
      uint32_t e = t.mono.exps[v];
      if (e == 0) continue;
      if (printed) out << "*";
      if (!ctx) throw Error("cannot print variable without a context");
      out << ctx->var(v).name;
      if (e > 1) out << "^" << e;
      printed = true;
    }
  }
  return out.str();
}

std::string to_string(const Scalar& s) {
  if (s.is_polynomial()) return to_string(s.num(), s.ctx());
  return "(" + to_string(s.num(), s.ctx()) + ")/(" + to_string(s.den(), s.ctx()) + ")";
}

namespace {

struct Parser {
  const Ctx& ctx;
  const std::string& text;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("parse error at offset " + std::to_string(pos) + ": " + msg);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) pos++;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      pos++;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  Int parse_int() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) pos++;
    if (pos == start) fail("expected integer");
    return Int(text.substr(start, pos - start));
  }

  int parse_exponent() {
    skip_ws();
    bool neg = eat('-');
    Int e = parse_int();
    if (e > 64) fail("exponent too large");
    int v = static_cast<int>(e);
    return neg ? -v : v;
  }

  Scalar parse_primary() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    Scalar base;
    char c = text[pos];
    if (c == '(') {
      pos++;
      base = parse_expr();
      if (!eat(')')) fail("expected ')'");
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      base = Scalar::rational(Rat(parse_int()));
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        pos++;
      std::string name = text.substr(start, pos - start);
      auto idx = ctx ? ctx->find(name) : std::nullopt;
      if (!idx) {
        pos = start;
        fail("unknown name '" + name + "'");
      }
      base = Scalar::var(ctx, *idx);
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    if (eat('^')) base = base.pow(parse_exponent());
    return base;
  }

  Scalar parse_unary() {
    if (eat('-')) return -parse_unary();
    return parse_primary();
  }

  Scalar parse_term() {
    Scalar r = parse_unary();
    for (;;) {
      if (eat('*')) {
        r = r * parse_unary();
      } else if (eat('/')) {
        Scalar d = parse_unary();
        if (d.is_zero()) fail("division by zero");
        r = r / d;
      } else {
        return r;
      }
    }
  }

  Scalar parse_expr() {
    Scalar r = parse_term();
    for (;;) {
      if (eat('+')) {
        r = r + parse_term();
      } else if (eat('-')) {
        r = r - parse_term();
      } else {
        return r;
      }
    }
  }
};

}  // namespace

Scalar parse_scalar(const Ctx& ctx, const std::string& text) {
  Parser p{ctx, text};
  Scalar r = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return r;
}

}  // namespace twinrep::exact
