#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "mp/errors.hpp"

namespace mp {

using Elem = uint32_t;  // element index in [0, q)

constexpr uint64_t kDefaultMaxQ = 1u << 16;

// Monic irreducible modulus of degree m over F_p, constant term first
// (coefficients c0..cm with cm = 1).
struct FieldSpec {
  int p = 2;
  int m = 1;
  std::vector<int> modulus;

  bool operator==(const FieldSpec&) const = default;
};

// Fully materialized GF(p^m).
//
// Elements are indexed by their coefficient vector in the generator t:
// index = sum_i c_i p^i  <->  element = sum_i c_i t^i. Index 0 is zero and
// index 1 is one, so prime-field values embed as themselves. Enumeration
// order 0..q-1 is this coefficient-vector order and is identical across
// builds of the same FieldSpec.
class FieldTable {
 public:
  FieldSpec spec;
  uint64_t q = 0;
  Elem generator = 0;  // fixed primitive element

  int p() const { return spec.p; }
  int m() const { return spec.m; }

  Elem add(Elem a, Elem b) const {
    if (!add_table_.empty()) return add_table_[a * q + b];
    if (spec.p == 2) return a ^ b;
    return add_slow(a, b);
  }
  Elem neg(Elem a) const {
    if (spec.p == 2) return a;
    return neg_table_[a];
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    uint64_t e = (uint64_t)log_[a] + log_[b];
    if (e >= q - 1) e -= q - 1;
    return exp_[e];
  }
  Elem inv(Elem a) const {
    if (a == 0) fail(Err::DivideByZero, "inverse of zero");
    return exp_[(q - 1 - log_[a]) % (q - 1)];
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long e) const;
  // x^(p^k)
  Elem frobenius(Elem a, int k) const {
    if (a == 0) return 0;
    return exp_[(uint64_t)log_[a] * pk_mod_[k % spec.m] % (q - 1)];
  }
  // unique y with y^p = a
  Elem p_root(Elem a) const { return frobenius(a, spec.m - 1); }
  // absolute trace, as a prime-field value in [0, p)
  int trace(Elem a) const { return trace_[a]; }
  // embed c in [0,p) as a field element (index c)
  Elem from_prime(int c) const { return (Elem)(((c % spec.p) + spec.p) % spec.p); }
  // scalar multiple c*x with c in F_p
  Elem scalar_mul(int c, Elem x) const { return mul(from_prime(c), x); }

  // smallest-index element of trace 1
  Elem trace_one_element() const { return trace_one_; }

  // coefficient digits of the element (c_0..c_{m-1})
  std::vector<int> digits(Elem a) const;
  Elem from_digits(const std::vector<int>& d) const;

  // element <-> text; polynomials in t like "t^2+2*t+1", or "0","1","2",...
  std::string render_element(Elem a) const;
  Elem parse_element(const std::string& text) const;

 private:
  friend FieldTable build_field(int, int, const std::vector<int>&, uint64_t);
  Elem add_slow(Elem a, Elem b) const;

  std::vector<Elem> exp_, log_;
  std::vector<uint8_t> trace_;
  std::vector<Elem> add_table_;  // only for small q
  std::vector<Elem> neg_table_;
  std::vector<uint64_t> pk_mod_;  // p^k mod (q-1)
  Elem trace_one_ = 0;
};

// Builds GF(p^m). With an empty modulus the lexicographically smallest
// irreducible monic polynomial is chosen: the one minimizing
// sum_i c_i p^i over the non-leading coefficients (deterministic).
FieldTable build_field(int p, int m, const std::vector<int>& modulus = {},
                       uint64_t max_q = kDefaultMaxQ);

// "p^m" or "p^m/c0,c1,...,cm"
FieldTable parse_field_spec(const std::string& text, uint64_t max_q = kDefaultMaxQ);
std::string render_field_spec(const FieldSpec& spec);

// Shared registry so repeated extension counts reuse tables. Thread-safe.
class FieldCache {
 public:
  std::shared_ptr<const FieldTable> get(int p, int m, uint64_t max_q = kDefaultMaxQ);
  static FieldCache& global();

 private:
  std::mutex mu_;
  std::vector<std::shared_ptr<const FieldTable>> tables_;
};

}  // namespace mp
