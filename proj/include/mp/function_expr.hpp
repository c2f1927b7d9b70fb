#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "mp/gf.hpp"

namespace mp {

// Declared pole locations on P^1(F_q).
struct PoleSet {
  std::set<Elem> finite;
  bool infinity = false;

  bool operator==(const PoleSet&) const = default;
  std::size_t size() const { return finite.size() + (infinity ? 1 : 0); }
  PoleSet merged(const PoleSet& o) const {
    PoleSet r = *this;
    r.finite.insert(o.finite.begin(), o.finite.end());
    r.infinity = r.infinity || o.infinity;
    return r;
  }
};

// A rational function on P^1 with poles restricted to rational points:
// polynomial part (term exponent -> coefficient, exponent 0 = constant)
// plus, per finite pole location a, terms c/(x-a)^order. Sparse maps keep a
// canonical ascending term order, so operator== is structural equality.
struct FunctionExpr {
  const FieldTable* field = nullptr;
  std::map<int, Elem> poly;                       // exponent >= 0 -> nonzero coeff
  std::map<Elem, std::map<int, Elem>> pole_part;  // location -> order >= 1 -> nonzero coeff
  PoleSet declared;

  bool operator==(const FunctionExpr& o) const {
    return field == o.field && poly == o.poly && pole_part == o.pole_part;
  }

  bool is_zero() const { return poly.empty() && pole_part.empty(); }
  bool is_constant() const { return pole_part.empty() && (poly.empty() || poly.rbegin()->first == 0); }
  Elem constant_value() const;
  int poly_degree() const;  // 0 when no terms of exponent >= 1

  // actual pole locations (from the representation)
  PoleSet actual_poles() const;
  // pole order at a point, 0 if regular there
  int pole_order_at(Elem a) const;
  int pole_order_at_infinity() const { return poly_degree(); }
  bool regular_at(Elem a) const { return pole_order_at(a) == 0; }
  bool regular_at_infinity() const { return poly_degree() == 0; }
  // value at a non-pole x; value at infinity is the constant term when regular there
  Elem eval(Elem x) const;
  Elem value_at_infinity() const;

  void set_poly_term(int exponent, Elem coeff);
  void add_poly_term(int exponent, Elem coeff);
  void set_pole_term(Elem location, int order, Elem coeff);
  void add_pole_term(Elem location, int order, Elem coeff);

  // declared poles default to the actual ones
  void declare_actual_poles();

  FunctionExpr plus(const FunctionExpr& o) const;
  FunctionExpr scaled(int c) const;  // c in F_p
  FunctionExpr scaled_by(Elem c) const;
};

FunctionExpr make_zero_function(const FieldTable& field);
// c * x^k
FunctionExpr monomial(const FieldTable& field, Elem c, int k);

// Expression grammar shared by the CLI and by witness serialization:
//   expr  := term (('+'|'-') term)*
//   term  := coeff | [coeff '*'] 'x' ['^' k]
//          | [coeff] '/' 'x' ['^' k]
//          | [coeff] '/' '(' 'x' '-' element ')' ['^' k]
// with coeff either an integer element index or a polynomial in t (in
// parentheses when it has several terms). Round-trips with render().
FunctionExpr parse_function(const FieldTable& field, const std::string& text);
std::string render_function(const FunctionExpr& f);

// "y^p-y=<expr>"; the p must match the field characteristic.
FunctionExpr parse_curve_equation(const FieldTable& field, const std::string& text);
std::string render_curve_equation(const FunctionExpr& f);

}  // namespace mp
