#include "pescat/numerics/special.hpp"

#include <cmath>
#include <stdexcept>

namespace pescat {

double bessel_j0(double x) {
  if (!std::isfinite(x)) throw std::domain_error("bessel_j0: x must be finite");
  return std::cyl_bessel_j(0.0, std::abs(x));
}

double bessel_y0(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::domain_error("bessel_y0: x must be positive");
  return std::cyl_neumann(0.0, x);
}

std::complex<double> hankel1_0(double x) {
  return {bessel_j0(x), bessel_y0(x)};
}

double expint_e1(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::domain_error("expint_e1: x must be positive");
  if (x <= 1.0) {
    // E1(x) = -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k k!)
    constexpr double kEulerGamma = 0.57721566490153286061;
    double sum = 0.0;
    double term = 1.0;
    for (int k = 1; k <= 40; ++k) {
      term *= -x / k;
      double contrib = -term / k;
      sum += contrib;
      if (std::abs(contrib) < 1e-18 * std::abs(sum)) break;
    }
    return -kEulerGamma - std::log(x) + sum;
  }
  // Modified Lentz evaluation of the continued fraction
  // E1(x) = e^{-x} / (x + 1 - 1^2/(x + 3 - 2^2/(x + 5 - ...))),
  // which keeps full relative precision where e^{-x} is tiny.
  constexpr double kTiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double f = d;
  for (int k = 1; k <= 200; ++k) {
    double a = -static_cast<double>(k) * k;
    b += 2.0;
    d = a * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + a / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    double delta = d * c;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return f * std::exp(-x);
}

}  // namespace pescat
