#include "mp/code.hpp"

#include <algorithm>

#include "mp/util.hpp"

namespace mp {

FunctionExpr x_times_additive(const FieldTable& field, const AdditivePoly& R) {
  FunctionExpr f = make_zero_function(field);
  long long pk = 1;
  for (size_t i = 0; i < R.coeffs.size(); ++i) {
    if (R.coeffs[i]) f.add_poly_term((int)pk + 1, R.coeffs[i]);
    pk *= field.p();
  }
  f.declared = f.actual_poles();
  return f;
}

Word TraceCode::word_from_function(const FunctionExpr& f) const {
  Word w;
  w.provenance = f;
  w.entries.resize(coordinates.size());
  auto red = as_reduce(f).reduced;
  for (size_t i = 0; i < coordinates.size(); ++i)
    w.entries[i] = (uint8_t)field->trace(red.eval(coordinates[i]));
  return w;
}

Word TraceCode::word_from_coeffs(const std::vector<uint8_t>& coeffs) const {
  Word w;
  w.provenance = function_from_coeffs(coeffs);
  w.entries.assign(coordinates.size(), 0);
  const int p = field->p();
  for (size_t j = 0; j < basis.size(); ++j) {
    if (j < coeffs.size() && coeffs[j]) {
      for (size_t i = 0; i < w.entries.size(); ++i)
        w.entries[i] = (uint8_t)((w.entries[i] + coeffs[j] * basis_words[j][i]) % p);
    }
  }
  return w;
}

FunctionExpr TraceCode::function_from_coeffs(const std::vector<uint8_t>& coeffs) const {
  FunctionExpr f = make_zero_function(*field);
  for (size_t j = 0; j < basis.size() && j < coeffs.size(); ++j)
    if (coeffs[j]) f = f.plus(basis[j].scaled(coeffs[j]));
  f.declared = f.declared.merged(poles);
  return f;
}

namespace {

// Prune candidate generating functions to a subset whose words are
// F_p-independent; fills basis_words.
void prune_to_independent(TraceCode& code, const std::vector<FunctionExpr>& candidates) {
  const FieldTable& F = *code.field;
  const int p = F.p();
  const size_t n = code.coordinates.size();
  GFpMatrix m(p, 0, n);
  std::vector<std::vector<uint8_t>> rows;
  for (auto& f : candidates) {
    auto red = as_reduce(f).reduced;
    std::vector<uint8_t> w(n);
    for (size_t i = 0; i < n; ++i) w[i] = (uint8_t)F.trace(red.eval(code.coordinates[i]));
    rows.push_back(w);
    GFpMatrix trial(p, rows.size(), n);
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t c = 0; c < n; ++c) trial.at(r, c) = rows[r][c];
    if (rref(trial) < (int)rows.size()) {
      rows.pop_back();  // dependent word
      continue;
    }
    code.basis.push_back(f);
    code.basis_words.push_back(rows.back());
  }
}

}  // namespace

TraceCode build_Ch(const FieldTable& field, int h, bool punctured) {
  if (h < 0 || h > field.m()) fail(Err::SizeLimitExceeded, "h out of range");
  TraceCode code;
  code.field = &field;
  code.kind = punctured ? CodeKind::ChStar : CodeKind::Ch;
  code.h = h;
  for (Elem x = 0; x < field.q; ++x)
    if (!(punctured && x == 0)) code.coordinates.push_back(x);
  code.poles.infinity = true;
  std::vector<FunctionExpr> cands;
  for (int i = 0; i <= h; ++i) {
    for (int j = 0; j < field.m(); ++j) {
      AdditivePoly R;
      R.coeffs.assign(i + 1, 0);
      std::vector<int> d(field.m(), 0);
      d[j] = 1;
      R.coeffs[i] = field.from_digits(d);  // t^j
      cands.push_back(x_times_additive(field, R));
    }
  }
  prune_to_independent(code, cands);
  return code;
}

TraceCode build_melas_dual(const FieldTable& field) {
  if (field.q < 4) fail(Err::SizeLimitExceeded, "dual Melas code needs q >= 4");
  TraceCode code;
  code.field = &field;
  code.kind = CodeKind::MelasDual;
  for (Elem x = 1; x < field.q; ++x) code.coordinates.push_back(x);
  code.poles.infinity = true;
  code.poles.finite.insert(0);
  std::vector<FunctionExpr> cands;
  for (int j = 0; j < field.m(); ++j) {
    std::vector<int> d(field.m(), 0);
    d[j] = 1;
    Elem ej = field.from_digits(d);
    FunctionExpr fa = make_zero_function(field);
    fa.set_poly_term(1, ej);
    fa.declared = code.poles;
    cands.push_back(fa);
    FunctionExpr fb = make_zero_function(field);
    fb.set_pole_term(0, 1, ej);
    fb.declared = code.poles;
    cands.push_back(fb);
  }
  prune_to_independent(code, cands);
  return code;
}

std::vector<AdditivePoly> kernel_of_phi(const FieldTable& field, int h) {
  const int p = field.p();
  const int m = field.m();
  const int dim = m * (h + 1);
  // evaluation matrix: rows = coordinates (all of F_q), cols = basis of R_h
  GFpMatrix mat(p, field.q, dim);
  int col = 0;
  for (int i = 0; i <= h; ++i) {
    for (int j = 0; j < m; ++j, ++col) {
      std::vector<int> d(m, 0);
      d[j] = 1;
      Elem c = field.from_digits(d);
      long long pk = 1;
      for (int k = 0; k < i; ++k) pk *= p;
      for (Elem x = 0; x < field.q; ++x) {
        Elem v = field.mul(field.mul(c, field.pow(x, pk)), x);  // c x^{p^i + 1}
        mat.at(x, col) = (uint8_t)field.trace(v);
      }
    }
  }
  auto ker = kernel_basis(mat);
  std::vector<AdditivePoly> out;
  for (auto& v : ker) {
    AdditivePoly R;
    R.coeffs.assign(h + 1, 0);
    for (int i = 0; i <= h; ++i) {
      std::vector<int> d(m, 0);
      for (int j = 0; j < m; ++j) d[j] = v[i * m + j];
      R.coeffs[i] = field.from_digits(d);
    }
    out.push_back(std::move(R));
  }
  return out;
}

Subcode make_subcode(const TraceCode& code, const std::vector<std::vector<uint8_t>>& rows) {
  Subcode d;
  d.code = &code;
  d.coeff_rows = rows;
  for (auto& row : rows) {
    d.words.push_back(code.word_from_coeffs(row));
    d.functions.push_back(code.function_from_coeffs(row));
  }
  return d;
}

int subcode_support_weight(const TraceCode& code,
                           const std::vector<const std::vector<uint8_t>*>& words) {
  int zero_cols = 0;
  const int n = code.length();
  for (int i = 0; i < n; ++i) {
    bool all_zero = true;
    for (auto* w : words) {
      if ((*w)[i] != 0) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) ++zero_cols;
  }
  return n - zero_cols;
}

long long subcode_weight(const Subcode& d) {
  const TraceCode& code = *d.code;
  const int p = code.field->p();
  const int r = d.r();
  long long pr = 1;
  for (int i = 0; i < r; ++i) pr *= p;
  // sum of weights over all words of D
  long long wsum = 0;
  const int n = code.length();
  std::vector<uint8_t> acc(n);
  for (long long idx = 0; idx < pr; ++idx) {
    std::fill(acc.begin(), acc.end(), 0);
    long long t = idx;
    for (int j = 0; j < r; ++j) {
      int cj = (int)(t % p);
      t /= p;
      if (cj)
        for (int i = 0; i < n; ++i) acc[i] = (uint8_t)((acc[i] + cj * d.words[j].entries[i]) % p);
    }
    for (int i = 0; i < n; ++i) wsum += acc[i] != 0;
  }
  long long denom = pr - pr / p;
  if (wsum % denom != 0) fail(Err::DefinitionMismatch, "average weight is not integral");
  long long avg = wsum / denom;
  std::vector<const std::vector<uint8_t>*> ws;
  for (auto& w : d.words) ws.push_back(&w.entries);
  long long supp = subcode_support_weight(code, ws);
  if (avg != supp)
    fail(Err::DefinitionMismatch, "average-weight and support-size definitions disagree");
  return avg;
}

void enumerate_subspaces(int p, int dim, int r,
                         const std::function<bool(const std::vector<std::vector<uint8_t>>&)>& visit) {
  if (r > dim || r <= 0) return;
  // choose pivot columns 0 <= j_1 < ... < j_r < dim, then free entries:
  // row i has arbitrary values in columns > j_i that are not pivots
  std::vector<int> piv(r);
  std::vector<std::vector<uint8_t>> rows(r, std::vector<uint8_t>(dim, 0));
  std::function<bool(int, int)> choose = [&](int i, int from) -> bool {
    if (i == r) {
      // collect free positions
      std::vector<std::pair<int, int>> free_pos;  // (row, col)
      std::vector<bool> is_piv(dim, false);
      for (int k = 0; k < r; ++k) is_piv[piv[k]] = true;
      for (int k = 0; k < r; ++k)
        for (int c = piv[k] + 1; c < dim; ++c)
          if (!is_piv[c]) free_pos.push_back({k, c});
      for (auto& row : rows) std::fill(row.begin(), row.end(), 0);
      for (int k = 0; k < r; ++k) rows[k][piv[k]] = 1;
      size_t nf = free_pos.size();
      std::vector<uint8_t> assign(nf, 0);
      for (;;) {
        if (!visit(rows)) return false;
        // increment base-p odometer
        size_t pos = 0;
        while (pos < nf) {
          auto [rr, cc] = free_pos[pos];
          if (++assign[pos] < p) {
            rows[rr][cc] = assign[pos];
            break;
          }
          assign[pos] = 0;
          rows[rr][cc] = 0;
          ++pos;
        }
        if (pos == nf) break;
      }
      return true;
    }
    for (int c = from; c <= dim - (r - i); ++c) {
      piv[i] = c;
      if (!choose(i + 1, c + 1)) return false;
    }
    return true;
  };
  choose(0, 0);
}

GhwResult ghw_exhaustive(const TraceCode& code, int r, uint64_t budget) {
  const int p = code.field->p();
  const int k = code.dimension();
  if (r < 1 || r > k) fail(Err::RankOutOfRange, "subcode dimension out of range");
  uint64_t total = gaussian_binomial(k, r, p, budget);
  if (total > budget)
    fail(Err::BudgetExceeded, "subspace enumeration would exceed the configured budget");

  GhwResult res;
  res.r = r;
  res.exact = true;
  long long best = code.length() + 1;
  std::vector<std::vector<uint8_t>> best_rows;
  // word rows for the current subspace, recomputed incrementally from coeffs
  const int n = code.length();
  std::vector<std::vector<uint8_t>> wrows(r, std::vector<uint8_t>(n));
  enumerate_subspaces(p, k, r, [&](const std::vector<std::vector<uint8_t>>& rows) {
    for (int i = 0; i < r; ++i) {
      std::fill(wrows[i].begin(), wrows[i].end(), 0);
      for (int j = 0; j < k; ++j) {
        int cj = rows[i][j];
        if (cj) {
          const auto& bw = code.basis_words[j];
          for (int c = 0; c < n; ++c) wrows[i][c] = (uint8_t)((wrows[i][c] + cj * bw[c]) % p);
        }
      }
    }
    std::vector<const std::vector<uint8_t>*> ptrs;
    for (auto& w : wrows) ptrs.push_back(&w);
    int wD = subcode_support_weight(code, ptrs);
    if (wD < best) {
      best = wD;
      best_rows = rows;
    }
    return true;
  });
  res.weight = best;
  res.witness = make_subcode(code, best_rows);
  return res;
}

GhwResult ghw_randomized(const TraceCode& code, int r, uint64_t seed, uint64_t iterations) {
  const int p = code.field->p();
  const int k = code.dimension();
  if (r < 1 || r > k) fail(Err::RankOutOfRange, "subcode dimension out of range");
  std::mt19937_64 rng(seed);
  GhwResult res;
  res.r = r;
  res.exact = false;
  res.seed = seed;
  long long best = code.length() + 1;
  std::vector<std::vector<uint8_t>> best_rows;
  for (uint64_t it = 0; it < iterations; ++it) {
    GFpMatrix m(p, r, k);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < k; ++j) m.at(i, j) = (uint8_t)(rng() % p);
    GFpMatrix chk = m;
    if (rref(chk) < r) continue;
    std::vector<std::vector<uint8_t>> rows(r, std::vector<uint8_t>(k));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < k; ++j) rows[i][j] = m.at(i, j);
    Subcode d = make_subcode(code, rows);
    std::vector<const std::vector<uint8_t>*> ptrs;
    for (auto& w : d.words) ptrs.push_back(&w.entries);
    int wD = subcode_support_weight(code, ptrs);
    if (wD < best) {
      best = wD;
      best_rows = rows;
    }
  }
  res.weight = best;
  res.witness = make_subcode(code, best_rows);
  return res;
}

WeightDistribution weight_distribution(const TraceCode& code) {
  const int p = code.field->p();
  const int k = code.dimension();
  const int n = code.length();
  WeightDistribution wd;
  wd.freq.assign(n + 1, 0);
  long long total = 1;
  for (int i = 0; i < k; ++i) total *= p;
  std::vector<uint8_t> acc(n, 0);
  std::vector<int> digits(k, 0);
  wd.freq[0] += 1;  // zero word
  for (long long idx = 1; idx < total; ++idx) {
    // increment odometer, updating acc by the changed digit deltas
    int pos = 0;
    while (true) {
      const auto& bw = code.basis_words[pos];
      if (digits[pos] + 1 < p) {
        digits[pos] += 1;
        for (int c = 0; c < n; ++c) acc[c] = (uint8_t)((acc[c] + bw[c]) % p);
        break;
      }
      // rolling over: subtract (p-1) copies == add one copy (mod p)
      digits[pos] = 0;
      for (int c = 0; c < n; ++c) acc[c] = (uint8_t)((acc[c] + bw[c]) % p);
      ++pos;
    }
    int w = 0;
    for (int c = 0; c < n; ++c) w += acc[c] != 0;
    wd.freq[w] += 1;
  }
  return wd;
}

WeightDistribution weight_distribution_via_curves(const TraceCode& code) {
  const FieldTable& F = *code.field;
  const int p = F.p();
  const int k = code.dimension();
  const int n = code.length();
  WeightDistribution wd;
  wd.freq.assign(n + 1, 0);
  wd.freq[0] += 1;
  long long total = 1;
  for (int i = 0; i < k; ++i) total *= p;
  // y^p - y table for solution counting without the trace map
  std::vector<Elem> asy(F.q);
  for (Elem y = 0; y < F.q; ++y) asy[y] = F.sub(F.pow(y, p), y);
  std::vector<long long> sols(F.q, 0);
  for (Elem y = 0; y < F.q; ++y) sols[asy[y]] += 1;
  for (long long idx = 1; idx < total; ++idx) {
    std::vector<uint8_t> coeffs(k);
    long long t = idx;
    for (int j = 0; j < k; ++j) {
      coeffs[j] = (uint8_t)(t % p);
      t /= p;
    }
    FunctionExpr f = code.function_from_coeffs(coeffs);
    auto red = as_reduce(f).reduced;
    // affine point count of y^p - y = f(x) over the coordinate set
    long long affine = 0;
    for (Elem x : code.coordinates) {
      if (!red.regular_at(x)) continue;
      affine += sols[red.eval(x)];
    }
    // w(c) = n - #{coordinates where a solution exists} = n - affine/p
    if (affine % p != 0) fail(Err::Internal, "affine count not divisible by p");
    long long w = n - affine / p;
    wd.freq[w] += 1;
  }
  return wd;
}

WordCurveCheck word_curve_check(const TraceCode& code, const FunctionExpr& f) {
  const FieldTable& F = *code.field;
  const int p = F.p();
  WordCurveCheck chk;
  Word w = code.word_from_function(f);
  if (w.is_zero()) fail(Err::Trivial, "word_curve_check needs a nonzero word");
  chk.weight = w.weight();

  FunctionExpr g = f;
  g.declared = g.declared.merged(code.poles);
  FibreProductSpec spec = FibreProductSpec::make(F, {g});
  spec.poles = spec.poles.merged(code.poles);
  FibreReport rep = fibre_report(spec);
  chk.curve_count = rep.count;

  long long pole_pts = 0;
  for (auto v : rep.pole_contributions) pole_pts += v;
  long long n = code.length();
  long long num = rep.count - pole_pts;
  if (num % p != 0) fail(Err::RelationViolated, "curve count minus pole points not divisible by p");
  chk.expected_weight = n - num / p;

  // the textbook form w = n - (#C - #P)/p applies when every declared pole
  // is an actual pole of the reduced function
  auto red = as_reduce(g).reduced;
  auto actual = red.actual_poles();
  chk.plain_relation_applies =
      actual.finite == spec.poles.finite && actual.infinity == spec.poles.infinity;
  chk.plain_expected = n - (rep.count - (long long)spec.poles.size()) / p;

  if (chk.expected_weight != chk.weight)
    fail(Err::RelationViolated, "word weight does not match the curve-count expression");
  return chk;
}

}  // namespace mp
