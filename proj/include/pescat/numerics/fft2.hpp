#pragma once

#include <complex>
#include <vector>

namespace pescat {

using CGrid = std::vector<std::complex<double>>;  // row-major n x n

// 2-D FFT pair on square power-of-two grids. Convention: forward transform
// unscaled (exponent e^{-2\pi i jk/n}), inverse scaled by 1/n^2, so
// ifft2(fft2(f)) == f. Non-power-of-two side throws std::invalid_argument.
CGrid fft2(const CGrid& grid, int n);
CGrid ifft2(const CGrid& grid, int n);

// In-place variants used by the solver hot path.
void fft2_inplace(CGrid& grid, int n);
void ifft2_inplace(CGrid& grid, int n);

}  // namespace pescat
