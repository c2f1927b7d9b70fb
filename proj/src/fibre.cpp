#include "mp/fibre.hpp"

namespace mp {

FibreProductSpec FibreProductSpec::make(const FieldTable& field,
                                        std::vector<FunctionExpr> basis) {
  FibreProductSpec s;
  s.field = &field;
  PoleSet ps;
  for (auto& f : basis) {
    if (f.field != &field) fail(Err::Internal, "basis functions live in different fields");
    ps = ps.merged(f.declared).merged(f.actual_poles());
  }
  s.basis = std::move(basis);
  s.poles = ps;
  return s;
}

namespace {

// All p^r - 1 nonzero combinations, reduced; Err::DependentBasis if any is
// equivalent to a constant.
std::vector<FunctionExpr> reduced_combinations(const FibreProductSpec& spec) {
  const FieldTable& F = *spec.field;
  const int p = F.p();
  const int r = spec.r();
  long long total = 1;
  for (int i = 0; i < r; ++i) total *= p;
  std::vector<FunctionExpr> out;
  out.reserve(total - 1);
  for (long long code = 1; code < total; ++code) {
    long long c = code;
    FunctionExpr comb = make_zero_function(F);
    for (int i = 0; i < r; ++i) {
      int ci = (int)(c % p);
      c /= p;
      if (ci) comb = comb.plus(spec.basis[i].scaled(ci));
    }
    auto red = as_reduce(comb);
    if (red.trivial)
      fail(Err::DependentBasis, "a nonzero combination of the basis is Artin-Schreier trivial");
    out.push_back(std::move(red.reduced));
  }
  return out;
}

// Rational points of C_D above one declared pole Q. Let V be the set of
// combinations (including 0) whose reduction is regular at Q. V is an
// F_p-subspace; the fibre above Q has #V points when every member of V takes
// a trace-zero value at Q, and none otherwise.
long long local_pole_count(const FibreProductSpec& spec,
                           const std::vector<FunctionExpr>& combos, bool at_infinity,
                           Elem location) {
  const FieldTable& F = *spec.field;
  long long regular = 1, regular_trace_zero = 1;  // the zero combination
  for (auto& g : combos) {
    bool reg = at_infinity ? g.regular_at_infinity() : g.regular_at(location);
    if (!reg) continue;
    ++regular;
    Elem v = at_infinity ? g.value_at_infinity() : g.eval(location);
    if (F.trace(v) == 0) ++regular_trace_zero;
  }
  // #V must be a power of p
  long long check = regular;
  while (check % F.p() == 0) check /= F.p();
  if (check != 1) fail(Err::NonIntegralResult, "regular set above a pole is not a subspace");
  return regular_trace_zero == regular ? regular : 0;
}

}  // namespace

FibreReport fibre_report(const FibreProductSpec& spec) {
  const FieldTable& F = *spec.field;
  const int p = F.p();
  const int r = spec.r();
  if (r < 1) fail(Err::DependentBasis, "empty basis");
  auto combos = reduced_combinations(spec);

  FibreReport rep;
  for (auto& g : combos) {
    ArtinSchreierCurve c{g};
    rep.member_genera.push_back(genus(c));
    rep.member_traces.push_back(trace_of_frobenius(c));
  }
  long long gsum = 0, tsum = 0;
  for (auto v : rep.member_genera) gsum += v;
  for (auto v : rep.member_traces) tsum += v;
  if (gsum % (p - 1) != 0 || tsum % (p - 1) != 0)
    fail(Err::NonIntegralResult, "member sums are not divisible by p-1");
  rep.genus = gsum / (p - 1);
  rep.trace = tsum / (p - 1);

  // common zeros outside the declared pole set, using reduced basis
  // representatives (trace values agree with the raw ones off P)
  std::vector<FunctionExpr> red_basis;
  for (auto& f : spec.basis) red_basis.push_back(as_reduce(f).reduced);
  long long zeros = 0;
  for (Elem x = 0; x < F.q; ++x) {
    if (spec.poles.finite.count(x)) continue;
    bool all = true;
    for (auto& f : red_basis) {
      if (F.trace(f.eval(x)) != 0) {
        all = false;
        break;
      }
    }
    if (all) ++zeros;
  }
  rep.common_zeros = zeros;

  long long pr = 1;
  for (int i = 0; i < r; ++i) pr *= p;
  long long count = pr * zeros;
  for (Elem loc : spec.poles.finite) {
    long long lc = local_pole_count(spec, combos, false, loc);
    rep.pole_contributions.push_back(lc);
    count += lc;
  }
  if (spec.poles.infinity) {
    long long lc = local_pole_count(spec, combos, true, 0);
    rep.pole_contributions.push_back(lc);
    count += lc;
  }
  rep.count = count;

  long long count_from_trace = (long long)F.q + 1 - rep.trace;
  if (count_from_trace != rep.count)
    fail(Err::RelationViolated,
         "fibre count bookkeeping disagrees with the member-trace identity: " +
             std::to_string(rep.count) + " vs " + std::to_string(count_from_trace));
  return rep;
}

long long fibre_count(const FibreProductSpec& spec) { return fibre_report(spec).count; }
long long fibre_trace(const FibreProductSpec& spec) { return fibre_report(spec).trace; }
long long fibre_genus(const FibreProductSpec& spec) { return fibre_report(spec).genus; }

long long fibre_affine_count_direct(const FibreProductSpec& spec) {
  const FieldTable& F = *spec.field;
  const int p = F.p();
  long long total = 0;
  // y^p - y as a function of y, tabulated once
  std::vector<Elem> asy(F.q);
  for (Elem y = 0; y < F.q; ++y) asy[y] = F.sub(F.pow(y, p), y);
  std::vector<FunctionExpr> red_basis;
  for (auto& f : spec.basis) red_basis.push_back(as_reduce(f).reduced);
  for (Elem x = 0; x < F.q; ++x) {
    if (spec.poles.finite.count(x)) continue;
    long long ways = 1;
    for (auto& f : red_basis) {
      Elem v = f.eval(x);
      long long sols = 0;
      for (Elem y = 0; y < F.q; ++y)
        if (asy[y] == v) ++sols;
      ways *= sols;
      if (ways == 0) break;
    }
    total += ways;
  }
  return total;
}

CoverComposeResult cover_compose(long long q, int p, int r, const CoverBase& base,
                                 const std::vector<CoverDatum>& covers) {
  long long expected = 0;
  long long pr = 1;
  for (int i = 0; i < r; ++i) pr *= p;
  expected = (pr - 1) / (p - 1);
  if ((long long)covers.size() != expected)
    fail(Err::ArityMismatch, "expected " + std::to_string(expected) + " covers, got " +
                                 std::to_string(covers.size()));
  long long tau_base = q + 1 - base.count;
  CoverComposeResult res;
  res.genus = base.genus;
  res.trace = tau_base;
  for (auto& cv : covers) {
    long long gf;
    if (cv.genus) {
      gf = *cv.genus;
    } else if (cv.simple_poles) {
      gf = base.genus + (long long)(p - 1) * (base.genus + *cv.simple_poles - 1);
    } else {
      fail(Err::ArityMismatch, "cover datum needs genus or a simple-pole count");
    }
    long long tf = q + 1 - cv.count;
    res.genus += gf - base.genus;
    res.trace += tf - tau_base;
  }
  res.count = q + 1 - res.trace;
  return res;
}

}  // namespace mp
