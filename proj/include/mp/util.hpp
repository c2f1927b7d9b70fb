#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace mp {

// Exact integer square root: largest s with s*s <= n.
uint64_t isqrt(uint64_t n);

// True if n = p^k for a prime p, k >= 1; if so, *p_out and *m_out are set.
bool prime_power(uint64_t n, uint64_t* p_out = nullptr, int* m_out = nullptr);

bool is_prime(uint64_t n);

// FNV-1a 64-bit, used to pin the bundled data files.
uint64_t fnv1a64(const std::string& data);

// Number of r-dimensional subspaces of F_p^k (Gaussian binomial [k r]_p),
// saturating at `cap`.
uint64_t gaussian_binomial(int k, int r, uint64_t p, uint64_t cap);

// Deterministic parallel map: fn(i) for i in [0, n). Results are indexed, so
// the outcome is independent of the number of workers.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

// --- dense linear algebra over a prime field F_p (p small) ---

struct GFpMatrix {
  int p = 2;
  std::size_t rows = 0, cols = 0;
  std::vector<uint8_t> a;  // row-major

  GFpMatrix() = default;
  GFpMatrix(int p_, std::size_t r, std::size_t c) : p(p_), rows(r), cols(c), a(r * c, 0) {}
  uint8_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  uint8_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

// In-place reduced row echelon form; returns rank, fills pivot columns.
int rref(GFpMatrix& m, std::vector<int>* pivot_cols = nullptr);

// Basis of the right kernel {x : A x = 0}; each row of the result is one
// kernel vector of length A.cols.
std::vector<std::vector<uint8_t>> kernel_basis(const GFpMatrix& a);

// One solution of A x = b, empty if inconsistent.
std::vector<uint8_t> solve(const GFpMatrix& a, const std::vector<uint8_t>& b, bool* ok);

}  // namespace mp
