#include "mp/function_expr.hpp"

#include <cctype>
#include <sstream>

namespace mp {

Elem FunctionExpr::constant_value() const {
  auto it = poly.find(0);
  return it == poly.end() ? 0 : it->second;
}

int FunctionExpr::poly_degree() const {
  if (poly.empty()) return 0;
  int d = poly.rbegin()->first;
  return d >= 1 ? d : 0;
}

PoleSet FunctionExpr::actual_poles() const {
  PoleSet ps;
  for (auto& [loc, terms] : pole_part)
    if (!terms.empty()) ps.finite.insert(loc);
  ps.infinity = poly_degree() >= 1;
  return ps;
}

int FunctionExpr::pole_order_at(Elem a) const {
  auto it = pole_part.find(a);
  if (it == pole_part.end() || it->second.empty()) return 0;
  return it->second.rbegin()->first;
}

Elem FunctionExpr::eval(Elem x) const {
  const FieldTable& F = *field;
  Elem acc = 0;
  for (auto& [e, c] : poly) acc = F.add(acc, F.mul(c, F.pow(x, e)));
  for (auto& [loc, terms] : pole_part) {
    Elem dx = F.sub(x, loc);
    Elem idx = F.inv(dx);
    for (auto& [ord, c] : terms) acc = F.add(acc, F.mul(c, F.pow(idx, ord)));
  }
  return acc;
}

Elem FunctionExpr::value_at_infinity() const { return constant_value(); }

void FunctionExpr::set_poly_term(int exponent, Elem coeff) {
  if (coeff == 0)
    poly.erase(exponent);
  else
    poly[exponent] = coeff;
}

void FunctionExpr::add_poly_term(int exponent, Elem coeff) {
  auto it = poly.find(exponent);
  Elem v = it == poly.end() ? coeff : field->add(it->second, coeff);
  set_poly_term(exponent, v);
}

void FunctionExpr::set_pole_term(Elem location, int order, Elem coeff) {
  auto& terms = pole_part[location];
  if (coeff == 0)
    terms.erase(order);
  else
    terms[order] = coeff;
  if (terms.empty()) pole_part.erase(location);
}

void FunctionExpr::add_pole_term(Elem location, int order, Elem coeff) {
  auto it = pole_part.find(location);
  Elem v = coeff;
  if (it != pole_part.end()) {
    auto jt = it->second.find(order);
    if (jt != it->second.end()) v = field->add(jt->second, coeff);
  }
  set_pole_term(location, order, v);
}

void FunctionExpr::declare_actual_poles() { declared = actual_poles(); }

FunctionExpr FunctionExpr::plus(const FunctionExpr& o) const {
  FunctionExpr r = *this;
  for (auto& [e, c] : o.poly) r.add_poly_term(e, c);
  for (auto& [loc, terms] : o.pole_part)
    for (auto& [ord, c] : terms) r.add_pole_term(loc, ord, c);
  r.declared = declared.merged(o.declared);
  return r;
}

FunctionExpr FunctionExpr::scaled(int c) const { return scaled_by(field->from_prime(c)); }

FunctionExpr FunctionExpr::scaled_by(Elem c) const {
  FunctionExpr r = make_zero_function(*field);
  r.declared = declared;
  if (c == 0) return r;
  for (auto& [e, co] : poly) r.poly[e] = field->mul(co, c);
  for (auto& [loc, terms] : pole_part)
    for (auto& [ord, co] : terms) r.pole_part[loc][ord] = field->mul(co, c);
  return r;
}

FunctionExpr make_zero_function(const FieldTable& field) {
  FunctionExpr f;
  f.field = &field;
  return f;
}

FunctionExpr monomial(const FieldTable& field, Elem c, int k) {
  FunctionExpr f = make_zero_function(field);
  f.set_poly_term(k, c);
  f.declared = f.actual_poles();
  return f;
}

namespace {

struct Lexer {
  const std::string& s;
  size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  long long integer() {
    skip();
    if (i >= s.size() || !std::isdigit((unsigned char)s[i])) fail(Err::ParseError, "expected integer in: " + s);
    long long v = 0;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) v = v * 10 + (s[i++] - '0');
    return v;
  }
};

// coefficient or pole location: integer index, bare t-polynomial, or a
// parenthesized t-polynomial
Elem parse_element_token(const FieldTable& F, Lexer& lx) {
  lx.skip();
  if (lx.peek() == '(') {
    lx.eat('(');
    size_t depth = 1, start = lx.i;
    while (lx.i < lx.s.size() && depth > 0) {
      if (lx.s[lx.i] == '(') ++depth;
      if (lx.s[lx.i] == ')') --depth;
      ++lx.i;
    }
    if (depth != 0) fail(Err::ParseError, "unbalanced parentheses in: " + lx.s);
    return F.parse_element(lx.s.substr(start, lx.i - 1 - start));
  }
  size_t start = lx.i;
  while (lx.i < lx.s.size()) {
    char c = lx.s[lx.i];
    if (std::isdigit((unsigned char)c) || c == 't' || c == '^') {
      ++lx.i;
    } else {
      break;
    }
  }
  if (lx.i == start) fail(Err::ParseError, "expected element in: " + lx.s);
  return F.parse_element(lx.s.substr(start, lx.i - start));
}

}  // namespace

FunctionExpr parse_function(const FieldTable& field, const std::string& text) {
  FunctionExpr f = make_zero_function(field);
  Lexer lx{text};
  int sign = 1;
  bool expect_term = true;
  while (true) {
    lx.skip();
    if (lx.i >= text.size()) break;
    char c = lx.peek();
    if (!expect_term) {
      if (c == '+') {
        sign = 1;
        lx.eat('+');
      } else if (c == '-') {
        sign = -1;
        lx.eat('-');
      } else {
        fail(Err::ParseError, "expected + or - in: " + text);
      }
      expect_term = true;
      continue;
    }
    // one term
    Elem coeff = 1;
    bool saw_coeff = false;
    if (c != 'x' && c != '/') {
      coeff = parse_element_token(field, lx);
      saw_coeff = true;
      lx.skip();
      if (lx.peek() == '*') lx.eat('*');
    }
    lx.skip();
    char d = lx.peek();
    if (d == 'x') {
      lx.eat('x');
      int k = 1;
      if (lx.peek() == '^') {
        lx.eat('^');
        k = (int)lx.integer();
      }
      f.add_poly_term(k, sign < 0 ? field.neg(coeff) : coeff);
    } else if (d == '/') {
      lx.eat('/');
      lx.skip();
      int k = 1;
      if (lx.peek() == '(') {
        lx.eat('(');
        if (!lx.eat('x')) fail(Err::ParseError, "expected x in pole term: " + text);
        if (!lx.eat('-')) fail(Err::ParseError, "expected - in pole term: " + text);
        Elem loc = parse_element_token(field, lx);
        if (!lx.eat(')')) fail(Err::ParseError, "expected ) in pole term: " + text);
        if (lx.peek() == '^') {
          lx.eat('^');
          k = (int)lx.integer();
        }
        f.add_pole_term(loc, k, sign < 0 ? field.neg(coeff) : coeff);
      } else if (lx.peek() == 'x') {
        lx.eat('x');
        if (lx.peek() == '^') {
          lx.eat('^');
          k = (int)lx.integer();
        }
        f.add_pole_term(0, k, sign < 0 ? field.neg(coeff) : coeff);
      } else {
        fail(Err::ParseError, "bad pole term in: " + text);
      }
    } else if (saw_coeff) {
      f.add_poly_term(0, sign < 0 ? field.neg(coeff) : coeff);
    } else {
      fail(Err::ParseError, "bad term in: " + text);
    }
    sign = 1;
    expect_term = false;
  }
  f.declared = f.actual_poles();
  return f;
}

namespace {

std::string render_coeff(const FieldTable& F, Elem c) {
  std::string s = F.render_element(c);
  if (s.find('+') != std::string::npos || s.find('-') != std::string::npos) return "(" + s + ")";
  return s;
}

}  // namespace

std::string render_function(const FunctionExpr& f) {
  const FieldTable& F = *f.field;
  std::string out;
  auto emit = [&](const std::string& term) {
    if (!out.empty()) out += " + ";
    out += term;
  };
  // polynomial part, descending exponent
  for (auto it = f.poly.rbegin(); it != f.poly.rend(); ++it) {
    auto [e, c] = *it;
    if (e == 0) {
      emit(F.render_element(c));
    } else {
      std::string xs = e == 1 ? "x" : "x^" + std::to_string(e);
      emit(c == 1 ? xs : render_coeff(F, c) + "*" + xs);
    }
  }
  // pole terms, by location then descending order
  for (auto& [loc, terms] : f.pole_part) {
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      auto [ord, c] = *it;
      std::string denom;
      if (loc == 0) {
        denom = ord == 1 ? "x" : "x^" + std::to_string(ord);
      } else {
        denom = "(x-" + F.render_element(loc) + ")";
        if (ord != 1) denom += "^" + std::to_string(ord);
      }
      emit((c == 1 ? "1" : render_coeff(F, c)) + "/" + denom);
    }
  }
  return out.empty() ? "0" : out;
}

FunctionExpr parse_curve_equation(const FieldTable& field, const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos) fail(Err::ParseError, "curve equation needs '=': " + text);
  std::string lhs = text.substr(0, eq);
  std::string norm;
  for (char c : lhs)
    if (!std::isspace((unsigned char)c)) norm += c;
  std::string expect = "y^" + std::to_string(field.spec.p) + "-y";
  if (norm != expect)
    fail(Err::ParseError, "left side must be " + expect + " for this field, got: " + lhs);
  return parse_function(field, text.substr(eq + 1));
}

std::string render_curve_equation(const FunctionExpr& f) {
  return "y^" + std::to_string(f.field->spec.p) + "-y = " + render_function(f);
}

}  // namespace mp
