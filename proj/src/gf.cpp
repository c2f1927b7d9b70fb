#include "mp/gf.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mp/util.hpp"

namespace mp {

namespace {

// Dense F_p[x] helpers on coefficient vectors (constant term first), used
// only while constructing tables.
using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return (int)a.size() - 1; }

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, int p) {
  Poly r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  int dm = deg(mod);
  while (deg(r) >= dm) {
    int d = deg(r);
    int c = r[d];  // mod is monic
    for (int i = 0; i <= dm; ++i) {
      int idx = d - dm + i;
      r[idx] = ((r[idx] - c * mod[i]) % p + p) % p;
    }
    trim(r);
  }
  return r;
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& mod, int p) {
  Poly r{1};
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, mod, p);
    base = poly_mulmod(base, base, mod, p);
    e >>= 1;
  }
  return r;
}

// Remainder of a by b (b monic).
Poly poly_rem(Poly a, const Poly& b, int p) {
  int db = deg(b);
  while (deg(a) >= db) {
    int d = deg(a);
    int c = a[d];
    for (int i = 0; i <= db; ++i) {
      int idx = d - db + i;
      a[idx] = ((a[idx] - c * b[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_from_code(uint64_t code, int p) {
  Poly r;
  while (code) {
    r.push_back((int)(code % p));
    code /= p;
  }
  return r;
}

bool divisible_by_some_of_degree(const Poly& f, int d, int p) {
  // trial division by all monic polynomials of degree d
  uint64_t count = 1;
  for (int i = 0; i < d; ++i) count *= p;
  for (uint64_t code = 0; code < count; ++code) {
    Poly b = poly_from_code(code, p);
    b.resize(d + 1, 0);
    b[d] = 1;
    Poly r = poly_rem(f, b, p);
    if (r.empty()) return true;
  }
  return false;
}

bool poly_irreducible(const Poly& f, int p) {
  int d = deg(f);
  if (d < 1) return false;
  if (f[0] == 0) return d == 1;  // divisible by x
  for (int e = 1; 2 * e <= d; ++e)
    if (divisible_by_some_of_degree(f, e, p)) return false;
  return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> fs;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

Elem FieldTable::add_slow(Elem a, Elem b) const {
  Elem r = 0, pw = 1;
  int p = spec.p;
  for (int i = 0; i < spec.m; ++i) {
    int da = (a / pw) % p, db = (b / pw) % p;
    r += pw * ((da + db) % p);
    pw *= p;
  }
  return r;
}

Elem FieldTable::pow(Elem a, long long e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) fail(Err::DivideByZero, "0 to a negative power");
    return 0;
  }
  long long ord = (long long)(q - 1);
  long long r = e % ord;
  if (r < 0) r += ord;
  return exp_[(uint64_t)log_[a] * (uint64_t)r % (q - 1)];
}

std::vector<int> FieldTable::digits(Elem a) const {
  std::vector<int> d(spec.m);
  for (int i = 0; i < spec.m; ++i) {
    d[i] = a % spec.p;
    a /= spec.p;
  }
  return d;
}

Elem FieldTable::from_digits(const std::vector<int>& d) const {
  Elem a = 0, pw = 1;
  for (int i = 0; i < spec.m; ++i) {
    int c = i < (int)d.size() ? ((d[i] % spec.p) + spec.p) % spec.p : 0;
    a += pw * c;
    pw *= spec.p;
  }
  return a;
}

std::string FieldTable::render_element(Elem a) const {
  if (a < (Elem)spec.p) return std::to_string(a);
  auto d = digits(a);
  std::string s;
  for (int i = spec.m - 1; i >= 0; --i) {
    if (d[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(d[i]);
    } else {
      if (d[i] != 1) s += std::to_string(d[i]) + "*";
      s += (i == 1) ? "t" : "t^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

Elem FieldTable::parse_element(const std::string& text) const {
  // integer index or polynomial in t
  bool has_t = text.find('t') != std::string::npos;
  if (!has_t) {
    try {
      long long v = std::stoll(text);
      if (v < 0 || (uint64_t)v >= q) fail(Err::ParseError, "element index out of range: " + text);
      return (Elem)v;
    } catch (const Error&) {
      throw;
    } catch (...) {
      fail(Err::ParseError, "bad element: " + text);
    }
  }
  // parse sum of c*t^k terms
  Elem acc = 0;
  size_t i = 0;
  int sign = 1;
  auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] == '+') { sign = 1; ++i; continue; }
    if (text[i] == '-') { sign = -1; ++i; continue; }
    long long c = 1;
    if (std::isdigit((unsigned char)text[i])) {
      c = 0;
      while (i < text.size() && std::isdigit((unsigned char)text[i])) c = c * 10 + (text[i++] - '0');
      skip_ws();
      if (i < text.size() && text[i] == '*') { ++i; skip_ws(); }
    }
    int k = 0;
    if (i < text.size() && text[i] == 't') {
      ++i;
      k = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        k = 0;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) k = k * 10 + (text[i++] - '0');
      }
    }
    if (k >= spec.m) fail(Err::ParseError, "t-degree too large in: " + text);
    std::vector<int> d(spec.m, 0);
    d[k] = (int)(((sign * c) % spec.p + spec.p) % spec.p);
    acc = add(acc, from_digits(d));
    sign = 1;
  }
  return acc;
}

FieldTable build_field(int p, int m, const std::vector<int>& modulus, uint64_t max_q) {
  if (!is_prime((uint64_t)p)) fail(Err::NonPrime, "p = " + std::to_string(p) + " is not prime");
  if (m < 1) fail(Err::SizeLimitExceeded, "extension degree must be >= 1");
  uint64_t q = 1;
  for (int i = 0; i < m; ++i) {
    q *= (uint64_t)p;
    if (q > max_q) fail(Err::SizeLimitExceeded, "field size exceeds limit");
  }

  Poly mod;
  if (!modulus.empty()) {
    if ((int)modulus.size() != m + 1 || modulus[m] != 1)
      fail(Err::ReducibleModulus, "modulus must be monic of degree m");
    mod.assign(modulus.begin(), modulus.end());
    for (int& c : mod) c = ((c % p) + p) % p;
    if (mod[m] != 1) fail(Err::ReducibleModulus, "modulus must be monic");
    if (!poly_irreducible(mod, p)) fail(Err::ReducibleModulus, "modulus is reducible");
  } else {
    // smallest irreducible by coefficient code sum_i c_i p^i
    uint64_t lower = q;  // = p^m, code space for non-leading coefficients
    bool found = false;
    for (uint64_t code = 0; code < lower; ++code) {
      Poly f = poly_from_code(code, p);
      f.resize(m + 1, 0);
      f[m] = 1;
      if (poly_irreducible(f, p)) {
        mod = f;
        found = true;
        break;
      }
    }
    if (!found) fail(Err::Internal, "no irreducible modulus found");
  }

  FieldTable t;
  t.spec.p = p;
  t.spec.m = m;
  t.spec.modulus = mod;
  t.q = q;

  auto poly_to_elem = [&](const Poly& a) {
    Elem e = 0, pw = 1;
    for (int i = 0; i < m; ++i) {
      e += pw * (i < (int)a.size() ? a[i] : 0);
      pw *= p;
    }
    return e;
  };
  auto elem_to_poly = [&](Elem e) {
    Poly a(m);
    for (int i = 0; i < m; ++i) {
      a[i] = e % p;
      e /= p;
    }
    trim(a);
    return a;
  };

  // find a primitive element, smallest index first
  auto factors = prime_factors(q - 1);
  Elem gen = 0;
  for (Elem cand = 2; cand < q; ++cand) {
    Poly cp = elem_to_poly(cand);
    bool ok = true;
    for (uint64_t f : factors) {
      Poly r = poly_powmod(cp, (q - 1) / f, mod, p);
      if (deg(r) == 0 && r[0] == 1) { ok = false; break; }
    }
    if (ok) { gen = cand; break; }
  }
  if (gen == 0 && q == 2) gen = 1;
  if (gen == 0) fail(Err::Internal, "no primitive element found");
  t.generator = gen;

  t.exp_.assign(q - 1, 0);
  t.log_.assign(q, 0);
  Poly genp = elem_to_poly(gen);
  Poly cur{1};
  for (uint64_t i = 0; i < q - 1; ++i) {
    Elem e = poly_to_elem(cur);
    t.exp_[i] = e;
    t.log_[e] = (Elem)i;
    cur = poly_mulmod(cur, genp, mod, p);
  }

  t.pk_mod_.assign(m, 0);
  t.pk_mod_[0] = 1 % (q - 1);
  for (int k = 1; k < m; ++k) t.pk_mod_[k] = t.pk_mod_[k - 1] * p % (q - 1);
  if (q == 2) t.pk_mod_[0] = 0;  // mod 1

  if (p != 2) {
    t.neg_table_.assign(q, 0);
    for (Elem a = 0; a < q; ++a) {
      Elem r = 0, pw = 1;
      Elem v = a;
      for (int i = 0; i < m; ++i) {
        int d = v % p;
        v /= p;
        r += pw * ((p - d) % p);
        pw *= p;
      }
      t.neg_table_[a] = r;
    }
  }
  if (q <= 1024) {
    t.add_table_.assign(q * q, 0);
    for (Elem a = 0; a < q; ++a)
      for (Elem b = 0; b < q; ++b) t.add_table_[a * q + b] = t.add_slow(a, b);
  }

  t.trace_.assign(q, 0);
  for (Elem a = 0; a < q; ++a) {
    Elem s = 0;
    for (int k = 0; k < m; ++k) s = t.add(s, t.frobenius(a, k));
    if (s >= (Elem)p) fail(Err::Internal, "trace landed outside the prime field");
    t.trace_[a] = (uint8_t)s;
  }
  t.trace_one_ = 0;
  for (Elem a = 0; a < q; ++a)
    if (t.trace_[a] == 1) { t.trace_one_ = a; break; }
  return t;
}

FieldTable parse_field_spec(const std::string& text, uint64_t max_q) {
  auto caret = text.find('^');
  if (caret == std::string::npos) {
    // bare prime, e.g. "7"
    try {
      int p = std::stoi(text);
      return build_field(p, 1, {}, max_q);
    } catch (const Error&) {
      throw;
    } catch (...) {
      fail(Err::ParseError, "bad field spec: " + text);
    }
  }
  auto slash = text.find('/');
  try {
    int p = std::stoi(text.substr(0, caret));
    int m = std::stoi(text.substr(caret + 1, slash == std::string::npos ? std::string::npos
                                                                        : slash - caret - 1));
    std::vector<int> mod;
    if (slash != std::string::npos) {
      std::stringstream ss(text.substr(slash + 1));
      std::string tok;
      while (std::getline(ss, tok, ',')) mod.push_back(std::stoi(tok));
    }
    return build_field(p, m, mod, max_q);
  } catch (const Error&) {
    throw;
  } catch (...) {
    fail(Err::ParseError, "bad field spec: " + text);
  }
}

std::string render_field_spec(const FieldSpec& spec) {
  std::string s = std::to_string(spec.p) + "^" + std::to_string(spec.m) + "/";
  for (size_t i = 0; i < spec.modulus.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(spec.modulus[i]);
  }
  return s;
}

std::shared_ptr<const FieldTable> FieldCache::get(int p, int m, uint64_t max_q) {
  std::lock_guard<std::mutex> lk(mu_);
  for (auto& t : tables_)
    if (t->spec.p == p && t->spec.m == m) return t;
  auto t = std::make_shared<FieldTable>(build_field(p, m, {}, max_q));
  tables_.push_back(t);
  return t;
}

FieldCache& FieldCache::global() {
  static FieldCache c;
  return c;
}

}  // namespace mp
