#include "mp/bounds.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

#include "mp/util.hpp"

namespace mp {

namespace {

void require_prime_power(uint64_t q) {
  if (!prime_power(q)) fail(Err::NotPrimePower, std::to_string(q) + " is not a prime power");
}

}  // namespace

long long hasse_weil_bound(uint64_t q, long long g) {
  require_prime_power(q);
  if (g < 0) fail(Err::Internal, "negative genus");
  // [2 g sqrt(q)] = isqrt(4 g^2 q)
  uint64_t rad = 4ull * (uint64_t)g * (uint64_t)g * q;
  return (long long)q + 1 + (long long)isqrt(rad);
}

long long serre_bound(uint64_t q, long long g) {
  require_prime_power(q);
  if (g < 0) fail(Err::Internal, "negative genus");
  return (long long)q + 1 + g * (long long)isqrt(4ull * q);
}

long long ihara_bound(uint64_t q, long long g) {
  require_prime_power(q);
  if (g < 0) fail(Err::Internal, "negative genus");
  uint64_t rad = (8ull * q + 1) * (uint64_t)(g * g) + 4ull * (q * q - q) * (uint64_t)g;
  uint64_t s = isqrt(rad);
  // floor((sqrt(rad) - g)/2) == floor((isqrt(rad) - g)/2) since the two
  // arguments differ by less than 1/2 of the divisor step
  return (long long)q + 1 + ((long long)s - g) / 2;
}

bool ft_maximal_admissible(uint64_t q, long long g) {
  uint64_t s = isqrt(q);
  if (s * s != q) fail(Err::NotSquare, "q must be a square");
  if (4 * g <= (long long)((s - 1) * (s - 1))) return true;
  return 2 * g == (long long)(q - s);
}

long long explicit_formula_bound(uint64_t q, long long g, const ExplicitFormulaParams& params) {
  require_prime_power(q);
  bool any_positive = false;
  for (double u : params.u) {
    if (u < 0) fail(Err::InvalidTestFunction, "negative coefficient u_n");
    if (u > 0) any_positive = true;
  }
  if (!any_positive) fail(Err::InvalidTestFunction, "psi_1 is identically zero");
  // f >= 0 on [0, pi] by dense sampling (heuristic validity; a false accept
  // only weakens a reported bound, it never touches curve verification)
  const int samples = 100000;
  for (int i = 0; i <= samples; ++i) {
    long double theta = (long double)M_PI * i / samples;
    long double f = 1.0L;
    for (size_t n = 0; n < params.u.size(); ++n)
      f += 2.0L * (long double)params.u[n] * std::cos((long double)(n + 1) * theta);
    if (f < -1e-12L) fail(Err::InvalidTestFunction, "test function is negative on [0, pi]");
  }
  long double sq = std::sqrt((long double)q);
  long double psi_inv = 0, psi = 0, t1 = 1, t2 = 1;
  for (size_t n = 0; n < params.u.size(); ++n) {
    t1 /= sq;
    t2 *= sq;
    psi_inv += (long double)params.u[n] * t1;
    psi += (long double)params.u[n] * t2;
  }
  long double af = 1.0L / psi_inv;
  long double bf = 1.0L + psi * af;
  long double val = af * (long double)g + bf;
  // snap values that are within rounding distance of an integer before
  // taking the floor (exact at squares)
  long double rounded = std::floor(val + 0.5L);
  if (std::fabs(val - rounded) < 1e-6L) return (long long)rounded;
  return (long long)std::floor(val);
}

long long explicit_formula_search(uint64_t q, long long g, int k) {
  if (k < 1) k = 1;
  if (k > 6) k = 6;
  // deterministic coordinate descent on a 1/64 grid starting from the
  // Weil-type function u = (1/2, 0, ..., 0)
  std::vector<double> u(k, 0.0);
  u[0] = 0.5;
  auto value = [&](const std::vector<double>& v) -> long long {
    ExplicitFormulaParams p{v};
    try {
      return explicit_formula_bound(q, g, p);
    } catch (const Error&) {
      return LLONG_MAX;
    }
  };
  long long best = value(u);
  const double step = 1.0 / 64.0;
  for (int round = 0; round < 200; ++round) {
    bool improved = false;
    for (int i = 0; i < k; ++i) {
      for (double d : {step, -step}) {
        std::vector<double> v = u;
        v[i] += d;
        if (v[i] < 0) continue;
        long long b = value(v);
        if (b < best) {
          best = b;
          u = v;
          improved = true;
        }
      }
    }
    if (!improved) break;
  }
  return best;
}

BoundSet best_upper(uint64_t q, long long g,
                    const std::optional<ExplicitFormulaParams>& params) {
  BoundSet b;
  b.q = q;
  b.g = g;
  b.hasse_weil = hasse_weil_bound(q, g);
  b.serre = serre_bound(q, g);
  b.ihara = ihara_bound(q, g);
  b.combined = std::min(b.serre, b.ihara);
  uint64_t s = isqrt(q);
  if (s * s == q && g > 0) {
    b.ft_admissible_maximal = ft_maximal_admissible(q, g);
    // the exclusion only rules out exact maximality
    long long maximal = (long long)q + 1 + 2 * g * (long long)s;
    if (!b.ft_admissible_maximal && b.combined == maximal) {
      b.combined -= 1;
      b.ft_shave_applied = true;
    }
  }
  if (params) b.explicit_formula = explicit_formula_bound(q, g, *params);
  return b;
}

}  // namespace mp
