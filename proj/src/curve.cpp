#include "mp/curve.hpp"

#include <algorithm>
#include <cmath>

namespace mp {

ReduceResult as_reduce(const FunctionExpr& f) {
  const FieldTable& F = *f.field;
  const int p = F.p();
  FunctionExpr g = f;

  // polynomial part: push the largest p-divisible exponent down
  for (;;) {
    int target = 0;
    for (auto it = g.poly.rbegin(); it != g.poly.rend(); ++it) {
      if (it->first >= 1 && it->first % p == 0) {
        target = it->first;
        break;
      }
    }
    if (target == 0) break;
    Elem c = g.poly[target];
    g.set_poly_term(target, 0);
    g.add_poly_term(target / p, F.p_root(c));
  }
  // finite poles, same scheme in 1/(x-a)
  for (auto loc_it = g.pole_part.begin(); loc_it != g.pole_part.end();) {
    Elem loc = loc_it->first;
    for (;;) {
      auto& terms = g.pole_part[loc];
      int target = 0;
      for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        if (it->first % p == 0) {
          target = it->first;
          break;
        }
      }
      if (target == 0) break;
      Elem c = terms[target];
      g.set_pole_term(loc, target, 0);
      g.add_pole_term(loc, target / p, F.p_root(c));
      if (g.pole_part.find(loc) == g.pole_part.end()) break;
    }
    loc_it = g.pole_part.upper_bound(loc);
  }
  // constant: only its trace class matters
  int s = F.trace(g.constant_value());
  g.set_poly_term(0, 0);
  if (s != 0) g.set_poly_term(0, F.mul(F.from_prime(s), F.trace_one_element()));

  ReduceResult r;
  r.trivial = g.is_constant();
  r.reduced = std::move(g);
  return r;
}

bool is_canonical_reduced(const FunctionExpr& f) {
  const int p = f.field->p();
  for (auto& [e, c] : f.poly)
    if (e >= 1 && e % p == 0) return false;
  for (auto& [loc, terms] : f.pole_part)
    for (auto& [ord, c] : terms)
      if (ord % p == 0) return false;
  auto c0 = f.constant_value();
  if (c0 != 0) {
    int s = f.field->trace(c0);
    if (s == 0) return false;
    if (c0 != f.field->mul(f.field->from_prime(s), f.field->trace_one_element())) return false;
  }
  return true;
}

ArtinSchreierCurve ArtinSchreierCurve::from(const FunctionExpr& raw) {
  auto r = as_reduce(raw);
  if (r.trivial) fail(Err::Trivial, "function is Artin-Schreier equivalent to a constant");
  return ArtinSchreierCurve{std::move(r.reduced)};
}

namespace {

void require_reduced(const ArtinSchreierCurve& c) {
  if (!is_canonical_reduced(c.f)) fail(Err::NotReduced, "curve function is not in reduced form");
  if (c.f.is_constant()) fail(Err::Trivial, "constant function does not define a cover");
}

}  // namespace

long long count_points(const ArtinSchreierCurve& c) {
  require_reduced(c);
  const FieldTable& F = c.field();
  long long zeros = 0;
  for (Elem x = 0; x < F.q; ++x) {
    if (c.f.pole_part.count(x)) continue;
    if (F.trace(c.f.eval(x)) == 0) ++zeros;
  }
  long long poles = (long long)c.f.pole_part.size() + (c.f.poly_degree() >= 1 ? 1 : 0);
  return (long long)F.p() * zeros + poles;
}

long long genus(const ArtinSchreierCurve& c) {
  require_reduced(c);
  const int p = c.field().p();
  long long s = 0;
  if (c.f.poly_degree() >= 1) s += (long long)(p - 1) * (c.f.poly_degree() + 1);
  for (auto& [loc, terms] : c.f.pole_part) s += (long long)(p - 1) * (terms.rbegin()->first + 1);
  long long two_g_minus_2 = -2 * p + s;
  if ((two_g_minus_2 + 2) % 2 != 0) fail(Err::Internal, "odd genus numerator");
  long long g = (two_g_minus_2 + 2) / 2;
  if (g < 0) fail(Err::Internal, "negative genus");
  return g;
}

long long trace_of_frobenius(const ArtinSchreierCurve& c) {
  return (long long)c.field().q + 1 - count_points(c);
}

namespace {

// Map an element of the base field into the extension field through the
// smallest root of the base modulus.
struct Embedding {
  const FieldTable* base;
  std::shared_ptr<const FieldTable> ext;
  Elem root;  // image of t

  Elem map(Elem a) const {
    auto d = base->digits(a);
    Elem acc = 0, pw = 1;
    for (int i = 0; i < base->m(); ++i) {
      if (d[i]) acc = ext->add(acc, ext->mul(ext->from_prime(d[i]), pw));
      pw = ext->mul(pw, root);
    }
    return acc;
  }
};

Embedding embed_into_extension(const FieldTable& F, int r, uint64_t max_q, FieldCache* cache) {
  if (!cache) cache = &FieldCache::global();
  uint64_t qr = 1;
  for (int i = 0; i < F.m() * r; ++i) {
    qr *= F.p();
    if (qr > max_q) fail(Err::SizeLimitExceeded, "extension field exceeds limit");
  }
  auto ext = cache->get(F.p(), F.m() * r, max_q);
  // root of the base modulus in the extension
  Elem root = 0;
  bool found = false;
  for (Elem z = 0; z < ext->q; ++z) {
    Elem acc = 0, pw = 1;
    for (int i = 0; i <= F.m(); ++i) {
      int ci = F.spec.modulus[i];
      if (ci) acc = ext->add(acc, ext->mul(ext->from_prime(ci), pw));
      pw = ext->mul(pw, z);
    }
    if (acc == 0) {
      root = z;
      found = true;
      break;
    }
  }
  if (!found) fail(Err::Internal, "no subfield embedding found");
  return Embedding{&F, ext, root};
}

}  // namespace

long long count_extension(const ArtinSchreierCurve& c, int r, uint64_t max_q, FieldCache* cache) {
  require_reduced(c);
  if (r == 1) return count_points(c);
  const FieldTable& F = c.field();
  Embedding em = embed_into_extension(F, r, max_q, cache);
  FunctionExpr fe = make_zero_function(*em.ext);
  for (auto& [e, co] : c.f.poly) fe.set_poly_term(e, em.map(co));
  for (auto& [loc, terms] : c.f.pole_part)
    for (auto& [ord, co] : terms) fe.set_pole_term(em.map(loc), ord, em.map(co));
  ArtinSchreierCurve ce{fe};  // already reduced; orders are unchanged
  return count_points(ce);
}

std::vector<long long> zeta_numerator(const ArtinSchreierCurve& c, uint64_t max_q,
                                      FieldCache* cache) {
  const long long g = genus(c);
  const long long q = (long long)c.field().q;
  std::vector<long long> b(2 * g + 1, 0);
  b[0] = 1;
  if (g == 0) return b;
  // power sums s_r = q^r + 1 - c(r)
  std::vector<long long> s(g + 1, 0);
  long long qr = 1;
  for (int r = 1; r <= g; ++r) {
    qr *= q;
    s[r] = qr + 1 - count_extension(c, r, max_q, cache);
  }
  for (int k = 1; k <= g; ++k) {
    long long acc = 0;
    for (int i = 1; i <= k; ++i) acc += s[i] * b[k - i];
    if (acc % k != 0) fail(Err::NonIntegralResult, "Newton identity gave a non-integer");
    b[k] = -acc / k;
  }
  long long qpow = 1;
  for (int i = g - 1; i >= 0; --i) {
    qpow *= q;  // q^{g-i}
    b[2 * g - i] = qpow * b[i];
  }
  return b;
}

std::vector<std::complex<double>> polynomial_roots(const std::vector<long long>& coeffs) {
  int n = (int)coeffs.size() - 1;
  while (n > 0 && coeffs[n] == 0) --n;
  if (n <= 0) return {};
  std::vector<std::complex<double>> a(n + 1);
  for (int i = 0; i <= n; ++i) a[i] = (double)coeffs[i];
  auto eval = [&](std::complex<double> z) {
    std::complex<double> acc = 0;
    for (int i = n; i >= 0; --i) acc = acc * z + a[i];
    return acc;
  };
  std::vector<std::complex<double>> roots(n);
  for (int i = 0; i < n; ++i)
    roots[i] = std::polar(0.4 + 0.9 * (i + 1) / (n + 1), 2 * M_PI * i / n + 0.7);
  for (int iter = 0; iter < 500; ++iter) {
    double delta = 0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> denom = a[n];
      for (int j = 0; j < n; ++j)
        if (j != i) denom *= roots[i] - roots[j];
      if (std::abs(denom) < 1e-300) continue;
      std::complex<double> step = eval(roots[i]) / denom;
      roots[i] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-13) break;
  }
  return roots;
}

CurveReport curve_report(const ArtinSchreierCurve& c, int upto_r, bool with_zeta,
                         uint64_t max_q) {
  CurveReport rep;
  rep.genus = genus(c);
  for (int r = 1; r <= upto_r; ++r) rep.counts.push_back(count_extension(c, r, max_q));
  if (rep.counts.empty()) rep.counts.push_back(count_points(c));
  rep.trace_frobenius = (long long)c.field().q + 1 - rep.counts[0];
  if (with_zeta) rep.zeta = zeta_numerator(c, max_q);
  return rep;
}

}  // namespace mp
