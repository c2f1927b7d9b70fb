#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mp/fibre.hpp"

namespace mp {

// Additive polynomial sum a_i X^{p^i}, coefficients a_0..a_h.
struct AdditivePoly {
  std::vector<Elem> coeffs;

  int h() const { return (int)coeffs.size() - 1; }
  bool is_zero() const {
    for (Elem c : coeffs)
      if (c) return false;
    return true;
  }
};

// x * R(x) as a FunctionExpr (terms c x^{p^i + 1}).
FunctionExpr x_times_additive(const FieldTable& field, const AdditivePoly& R);

struct Word {
  std::vector<uint8_t> entries;  // over F_p
  FunctionExpr provenance;       // generating function

  int weight() const {
    int w = 0;
    for (auto e : entries) w += e != 0;
    return w;
  }
  bool is_zero() const { return weight() == 0; }
};

struct WeightDistribution {
  std::vector<long long> freq;  // A_0..A_n
};

enum class CodeKind { Ch, ChStar, MelasDual, Custom };

// A trace code: words (Tr f(x))_x over the coordinate list, f running over
// the F_p-span of `basis`. The basis is pruned to functions whose words are
// F_p-independent, so dimension() == basis.size().
struct TraceCode {
  const FieldTable* field = nullptr;
  CodeKind kind = CodeKind::Custom;
  int h = -1;
  std::vector<Elem> coordinates;                // evaluation points
  PoleSet poles;                                // declared pole set for curve bookkeeping
  std::vector<FunctionExpr> basis;              // generating functions (independent words)
  std::vector<std::vector<uint8_t>> basis_words;

  int length() const { return (int)coordinates.size(); }
  int dimension() const { return (int)basis.size(); }

  Word word_from_function(const FunctionExpr& f) const;
  Word word_from_coeffs(const std::vector<uint8_t>& coeffs) const;  // over the pruned basis
  FunctionExpr function_from_coeffs(const std::vector<uint8_t>& coeffs) const;
};

// C_h (punctured: coordinate x = 0 removed). Dimension is m(h+1) minus the
// kernel dimension of the evaluation map.
TraceCode build_Ch(const FieldTable& field, int h, bool punctured);

// Dual Melas code: words (Tr(ax + b/x))_{x != 0}.
TraceCode build_melas_dual(const FieldTable& field);

// Basis of additive polynomials R in R_h with Tr(xR(x)) identically zero.
std::vector<AdditivePoly> kernel_of_phi(const FieldTable& field, int h);

struct Subcode {
  const TraceCode* code = nullptr;
  std::vector<std::vector<uint8_t>> coeff_rows;  // r x dim, row-reduced
  std::vector<Word> words;                       // basis words
  std::vector<FunctionExpr> functions;

  int r() const { return (int)coeff_rows.size(); }
};

Subcode make_subcode(const TraceCode& code, const std::vector<std::vector<uint8_t>>& rows);

// Average-weight definition w(D) = sum_{c in D} w(c) / (p^r - p^{r-1}),
// cross-checked against the support-size definition; a mismatch raises
// Err::DefinitionMismatch.
long long subcode_weight(const Subcode& d);

// Support-size only (cheap), used inside enumeration loops.
int subcode_support_weight(const TraceCode& code, const std::vector<const std::vector<uint8_t>*>& words);

struct GhwResult {
  int r = 0;
  long long weight = 0;   // d_r (exhaustive) or best found (randomized upper bound)
  bool exact = false;
  Subcode witness;
  uint64_t seed = 0;      // for randomized runs
};

// Exact d_r by enumerating subspaces via reduced row echelon forms
// (Err::BudgetExceeded if the Gaussian binomial exceeds the budget).
GhwResult ghw_exhaustive(const TraceCode& code, int r, uint64_t budget = 100000000ull);

// Seeded random search; returns the best (upper-bound) witness.
GhwResult ghw_randomized(const TraceCode& code, int r, uint64_t seed, uint64_t iterations);

// Enumerates all r-dimensional subspaces (echelon representatives) and calls
// visit with the coefficient rows; stops early if visit returns false.
void enumerate_subspaces(int p, int dim, int r,
                         const std::function<bool(const std::vector<std::vector<uint8_t>>&)>& visit);

// Weight distribution by enumerating all p^dim words.
WeightDistribution weight_distribution(const TraceCode& code);

// Weight distribution derived from point counts of the member curves
// (independent route: counts y-solutions of y^p - y = f(x) directly).
WeightDistribution weight_distribution_via_curves(const TraceCode& code);

struct WordCurveCheck {
  int weight = 0;
  long long curve_count = 0;
  long long expected_weight = 0;
  bool plain_relation_applies = false;  // all declared poles are actual poles
  long long plain_expected = 0;
};

// Checks the weight/point-count dictionary for the word of f in the given
// code: w = n - (#C - sum of local pole counts)/p. Err::RelationViolated on
// mismatch.
WordCurveCheck word_curve_check(const TraceCode& code, const FunctionExpr& f);

}  // namespace mp
