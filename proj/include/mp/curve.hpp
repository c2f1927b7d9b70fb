#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "mp/function_expr.hpp"

namespace mp {

// Result of Artin-Schreier reduction. `trivial` is set when the input is
// equivalent to a constant (y^p - y = f then does not define a curve in the
// sense used here).
struct ReduceResult {
  FunctionExpr reduced;
  bool trivial = false;
};

// Canonical reduction f -> f - (g^p - g) - a: repeatedly pushes every
// p-divisible term order d down to d/p via the p-th root of its coefficient
// (at infinity in x, at finite poles in 1/(x-a)), then replaces the residual
// constant by Tr(const) * k where k is the smallest element of trace one.
// The canonical form has no p-divisible term order anywhere. The map is
// F_p-linear and idempotent and preserves the cover.
ReduceResult as_reduce(const FunctionExpr& f);

bool is_canonical_reduced(const FunctionExpr& f);

// y^p - y = f with f in canonical reduced nonconstant form.
struct ArtinSchreierCurve {
  FunctionExpr f;

  static ArtinSchreierCurve from(const FunctionExpr& raw);  // reduces; Err::Trivial if constant
  const FieldTable& field() const { return *f.field; }
};

// #C(F_q) of the complete nonsingular model: p * #{x not a pole : Tr f(x) = 0}
// plus one point per rational pole (poles of reduced f are totally ramified).
long long count_points(const ArtinSchreierCurve& c);

// Genus from 2g - 2 = -2p + sum_poles (p-1)(d_Q + 1).
long long genus(const ArtinSchreierCurve& c);

long long trace_of_frobenius(const ArtinSchreierCurve& c);

// Point count over F_{q^r}; builds (and caches) the extension field and
// re-expresses f there through a subfield embedding.
long long count_extension(const ArtinSchreierCurve& c, int r, uint64_t max_q = kDefaultMaxQ,
                          FieldCache* cache = nullptr);

// Coefficients b_0..b_2g of the zeta numerator P_1(t): b_0..b_g by Newton's
// identities from the power sums q^r + 1 - c(r), the rest by the functional
// equation b_{2g-i} = q^{g-i} b_i.
std::vector<long long> zeta_numerator(const ArtinSchreierCurve& c, uint64_t max_q = kDefaultMaxQ,
                                      FieldCache* cache = nullptr);

// Complex roots of a polynomial with integer coefficients (ascending), by
// Durand-Kerner. Used for the |alpha| = sqrt(q) checks.
std::vector<std::complex<double>> polynomial_roots(const std::vector<long long>& coeffs);

struct CurveReport {
  long long genus = 0;
  std::vector<long long> counts;  // c(1..k)
  long long trace_frobenius = 0;
  std::optional<std::vector<long long>> zeta;
};

CurveReport curve_report(const ArtinSchreierCurve& c, int upto_r = 1, bool with_zeta = false,
                         uint64_t max_q = kDefaultMaxQ);

}  // namespace mp
