#pragma once

#include <optional>
#include <vector>

#include "mp/curve.hpp"

namespace mp {

// F_p-independent (modulo Artin-Schreier equivalence) basis f_1..f_r over a
// common field, with a declared pole set containing all their poles.
struct FibreProductSpec {
  const FieldTable* field = nullptr;
  std::vector<FunctionExpr> basis;
  PoleSet poles;

  int r() const { return (int)basis.size(); }
  static FibreProductSpec make(const FieldTable& field, std::vector<FunctionExpr> basis);
};

struct FibreReport {
  long long count = 0;       // #C_D(F_q), computed from the coordinatewise bookkeeping
  long long trace = 0;       // tau_D = (sum of member traces) / (p-1)
  long long genus = 0;       // (sum of member genera) / (p-1)
  long long common_zeros = 0;  // #{x outside P with Tr f_i(x) = 0 for all i}
  std::vector<long long> pole_contributions;  // one per declared pole (finite asc, then inf)
  std::vector<long long> member_genera;       // per nonzero combination
  std::vector<long long> member_traces;
};

// Validates the spec (every nonzero F_p-combination must reduce to a
// nonconstant function; otherwise Err::DependentBasis), then evaluates the
// point count two ways: p^r * common zeros + local pole counts, and
// q + 1 - tau_D from the member traces. A mismatch is a hard
// Err::RelationViolated, never silently patched.
FibreReport fibre_report(const FibreProductSpec& spec);

long long fibre_count(const FibreProductSpec& spec);
long long fibre_trace(const FibreProductSpec& spec);
long long fibre_genus(const FibreProductSpec& spec);

// Counts solutions (x, y_1..y_r) of y_i^p - y_i = f_i(x) with x outside the
// declared poles, by direct enumeration of all tuples. Equals p^r times the
// common-zero count; used as an independent cross-check.
long long fibre_affine_count_direct(const FibreProductSpec& spec);

// --- composition arithmetic for covers of a base curve with invariants
//     (genus, #points over F_q) ---

struct CoverBase {
  long long genus = 0;
  long long count = 0;
};

// One cover y^p - y = f of the base; genus may be given directly or via the
// number n_f of simple poles of f (then g_f = g + (p-1)(g + n_f - 1)).
struct CoverDatum {
  std::optional<long long> genus;
  std::optional<long long> simple_poles;
  long long count = 0;
};

struct CoverComposeResult {
  long long genus = 0;
  long long trace = 0;
  long long count = 0;
};

// Composes an r-dimensional space of covers: expects one datum per point of
// the projectivization, i.e. (p^r - 1)/(p - 1) entries (Err::ArityMismatch
// otherwise), and applies
//   tau_L = tau_C + sum (tau_f - tau_C),  g_L = g_C + sum (g_f - g_C).
CoverComposeResult cover_compose(long long q, int p, int r, const CoverBase& base,
                                 const std::vector<CoverDatum>& covers);

}  // namespace mp
