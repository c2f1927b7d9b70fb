#include "mp/util.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstring>

namespace mp {

uint64_t isqrt(uint64_t n) {
  if (n == 0) return 0;
  uint64_t s = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
  while (s > 0 && s > n / s) --s;            // s*s <= n without overflow
  while ((s + 1) <= n / (s + 1)) ++s;
  return s;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool prime_power(uint64_t n, uint64_t* p_out, int* m_out) {
  if (n < 2) return false;
  uint64_t p = n;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) { p = d; break; }
  }
  int m = 0;
  uint64_t v = n;
  while (v % p == 0) { v /= p; ++m; }
  if (v != 1) return false;
  if (p_out) *p_out = p;
  if (m_out) *m_out = m;
  return true;
}

uint64_t fnv1a64(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

uint64_t gaussian_binomial(int k, int r, uint64_t p, uint64_t cap) {
  if (r < 0 || r > k) return 0;
  // [k r]_p = prod_{i=0}^{r-1} (p^{k-i} - 1) / (p^{r-i} - 1), computed as a
  // running long double estimate plus exact u64 with saturation.
  long double est = 1.0L;
  for (int i = 0; i < r; ++i) {
    long double num = std::pow((long double)p, k - i) - 1.0L;
    long double den = std::pow((long double)p, r - i) - 1.0L;
    est *= num / den;
    if (est > (long double)cap * 2.0L) return cap + 1;
  }
  // exact recurrence: G(k, r) = G(k-1, r-1) + p^r G(k-1, r)
  std::vector<uint64_t> g(r + 1, 0);
  g[0] = 1;
  for (int kk = 1; kk <= k; ++kk) {
    for (int rr = std::min(r, kk); rr >= 1; --rr) {
      uint64_t pr = 1;
      bool sat = false;
      for (int i = 0; i < rr; ++i) {
        if (pr > cap * 2 / p + 1) { sat = true; break; }
        pr *= p;
      }
      uint64_t v = sat ? cap + 1 : g[rr] * pr;
      if (!sat && pr != 0 && g[rr] > (UINT64_MAX - g[rr - 1]) / pr) v = cap + 1;
      uint64_t s = g[rr - 1] + v;
      g[rr] = std::min<uint64_t>(s, cap + 1);
    }
  }
  return g[r];
}

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs < 1) jobs = 1;
  jobs = std::min<int>(jobs, (int)std::max<std::size_t>(1, n));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

int rref(GFpMatrix& m, std::vector<int>* pivot_cols) {
  const int p = m.p;
  auto inv_mod = [&](int x) {
    for (int y = 1; y < p; ++y)
      if (x * y % p == 1) return y;
    return 0;
  };
  int rank = 0;
  if (pivot_cols) pivot_cols->clear();
  for (std::size_t col = 0; col < m.cols && (std::size_t)rank < m.rows; ++col) {
    std::size_t piv = m.rows;
    for (std::size_t r = rank; r < m.rows; ++r)
      if (m.at(r, col) != 0) { piv = r; break; }
    if (piv == m.rows) continue;
    if (piv != (std::size_t)rank)
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(rank, c));
    int iv = inv_mod(m.at(rank, col));
    for (std::size_t c = 0; c < m.cols; ++c) m.at(rank, c) = (uint8_t)(m.at(rank, c) * iv % p);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == (std::size_t)rank) continue;
      int f = m.at(r, col);
      if (f == 0) continue;
      for (std::size_t c = 0; c < m.cols; ++c) {
        int v = m.at(r, c) - f * m.at(rank, c) % p;
        m.at(r, c) = (uint8_t)((v % p + p) % p);
      }
    }
    if (pivot_cols) pivot_cols->push_back((int)col);
    ++rank;
  }
  return rank;
}

std::vector<std::vector<uint8_t>> kernel_basis(const GFpMatrix& a) {
  GFpMatrix m = a;
  std::vector<int> piv;
  int rank = rref(m, &piv);
  std::vector<bool> is_piv(m.cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<uint8_t>> basis;
  for (std::size_t fc = 0; fc < m.cols; ++fc) {
    if (is_piv[fc]) continue;
    std::vector<uint8_t> v(m.cols, 0);
    v[fc] = 1;
    for (int r = 0; r < rank; ++r) {
      int c = piv[r];
      int val = m.at(r, fc);
      v[c] = (uint8_t)((m.p - val) % m.p);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<uint8_t> solve(const GFpMatrix& a, const std::vector<uint8_t>& b, bool* ok) {
  GFpMatrix m(a.p, a.rows, a.cols + 1);
  for (std::size_t r = 0; r < a.rows; ++r) {
    std::memcpy(&m.a[r * m.cols], &a.a[r * a.cols], a.cols);
    m.at(r, a.cols) = b[r];
  }
  std::vector<int> piv;
  int rank = rref(m, &piv);
  for (int r = 0; r < rank; ++r) {
    if ((std::size_t)piv[r] == a.cols) {  // pivot in augmented column
      if (ok) *ok = false;
      return {};
    }
  }
  std::vector<uint8_t> x(a.cols, 0);
  for (int r = 0; r < rank; ++r) x[piv[r]] = m.at(r, a.cols);
  if (ok) *ok = true;
  return x;
}

}  // namespace mp
