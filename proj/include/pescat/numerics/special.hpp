#pragma once

#include <complex>

namespace pescat {

// Order-zero Bessel function of the first kind. Total on finite x >= 0;
// absolute error <= 1e-12 for x <= 100.
double bessel_j0(double x);

// Order-zero Bessel function of the second kind. Requires x > 0
// (throws std::domain_error otherwise); absolute error <= 1e-10 for x <= 100.
double bessel_y0(double x);

// H0^(1)(x) = J0(x) + i Y0(x). Requires x > 0.
std::complex<double> hankel1_0(double x);

// Exponential integral E1(x) = \int_x^\infty e^{-s}/s ds. Requires x > 0;
// relative error <= 1e-10.
double expint_e1(double x);

}  // namespace pescat
