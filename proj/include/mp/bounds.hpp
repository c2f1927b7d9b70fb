#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mp/errors.hpp"

namespace mp {

// Coefficients u_1..u_k of a trigonometric test polynomial
// f = 1 + 2 sum u_n cos(n theta) with f >= 0 and u_n >= 0.
struct ExplicitFormulaParams {
  std::vector<double> u;
};

struct BoundSet {
  uint64_t q = 0;
  long long g = 0;
  long long hasse_weil = 0;
  long long serre = 0;
  long long ihara = 0;
  long long combined = 0;  // min(serre, ihara), minus 1 when the maximality shave applies
  std::optional<long long> explicit_formula;
  bool ft_admissible_maximal = true;  // meaningful when q is a square
  bool ft_shave_applied = false;
};

// q + 1 + [2 g sqrt(q)], exact integer arithmetic.
long long hasse_weil_bound(uint64_t q, long long g);
// q + 1 + g [2 sqrt(q)]
long long serre_bound(uint64_t q, long long g);
// q + 1 + [(sqrt((8q+1) g^2 + 4 (q^2-q) g) - g)/2]
long long ihara_bound(uint64_t q, long long g);

// Whether a maximal curve (#C = q + 1 + 2 g sqrt(q), q square) of genus g can
// exist: g <= (sqrt(q)-1)^2/4 or g = (q - sqrt(q))/2. Err::NotSquare if q is
// not a square.
bool ft_maximal_admissible(uint64_t q, long long g);

// floor(a_f g + b_f) with a_f = 1/psi_1(1/sqrt q), b_f = 1 + psi_1(sqrt q) a_f,
// psi_1(t) = sum u_n t^n. Validity of the test function is enforced
// (Err::InvalidTestFunction): u_n >= 0, some u_n > 0, and f >= 0 checked by
// dense sampling on [0, pi].
long long explicit_formula_bound(uint64_t q, long long g, const ExplicitFormulaParams& params);

// Small deterministic coordinate-descent search over k <= 6 coefficients;
// returns the best bound found (an upper bound for N_q(g), not necessarily
// optimal).
long long explicit_formula_search(uint64_t q, long long g, int k = 3);

BoundSet best_upper(uint64_t q, long long g,
                    const std::optional<ExplicitFormulaParams>& params = std::nullopt);

}  // namespace mp
