#include "pescat/numerics/fft2.hpp"

#include <cmath>
#include <stdexcept>

namespace pescat {

namespace {

using Complex = std::complex<double>;

bool is_pow2(int n) { return n >= 1 && (n & (n - 1)) == 0; }

// Iterative radix-2 Cooley-Tukey on a contiguous length-n block.
// tw[k] = exp(-2 pi i k / n) for k < n/2.
void fft1d(Complex* a, int n, const std::vector<Complex>& tw) {
  for (int i = 1, j = 0; i < n; ++i) {  // bit-reversal permutation
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (int len = 2; len <= n; len <<= 1) {
    int step = n / len;
    int half = len / 2;
    for (int blk = 0; blk < n; blk += len) {
      for (int k = 0; k < half; ++k) {
        Complex u = a[blk + k];
        Complex v = a[blk + k + half] * tw[k * step];
        a[blk + k] = u + v;
        a[blk + k + half] = u - v;
      }
    }
  }
}

void check_grid(const CGrid& grid, int n) {
  if (!is_pow2(n))
    throw std::invalid_argument("fft2: side length must be a power of two");
  if (grid.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("fft2: grid size does not match side length");
}

}  // namespace

void fft2_inplace(CGrid& grid, int n) {
  check_grid(grid, n);
  if (n == 1) return;
  std::vector<Complex> tw(n / 2);
  for (int k = 0; k < n / 2; ++k) tw[k] = std::polar(1.0, -2.0 * M_PI * k / n);
  for (int r = 0; r < n; ++r) fft1d(&grid[static_cast<std::size_t>(r) * n], n, tw);
  std::vector<Complex> col(n);
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) col[r] = grid[static_cast<std::size_t>(r) * n + c];
    fft1d(col.data(), n, tw);
    for (int r = 0; r < n; ++r) grid[static_cast<std::size_t>(r) * n + c] = col[r];
  }
}

void ifft2_inplace(CGrid& grid, int n) {
  check_grid(grid, n);
  for (Complex& c : grid) c = std::conj(c);
  fft2_inplace(grid, n);
  double scale = 1.0 / (static_cast<double>(n) * n);
  for (Complex& c : grid) c = std::conj(c) * scale;
}

CGrid fft2(const CGrid& grid, int n) {
  CGrid out = grid;
  fft2_inplace(out, n);
  return out;
}

CGrid ifft2(const CGrid& grid, int n) {
  CGrid out = grid;
  ifft2_inplace(out, n);
  return out;
}

}  // namespace pescat
