#include "pescat/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace pescat {

bool in_exclusion_band(Complex lambda, double band) {
  return std::abs(std::abs(lambda) - 1.0) < band;
}

namespace {

void require_valid(const SpectralParam& p) {
  if (p.lambda == Complex(0.0))
    throw std::invalid_argument("spectral: lambda must be nonzero");
  if (!(p.energy > 0.0))
    throw std::invalid_argument("spectral: energy must be positive");
  if (in_exclusion_band(p.lambda))
    throw std::invalid_argument(
        "spectral: |lambda| lies inside the unit-circle exclusion band");
}

}  // namespace

ZetaVector zeta_from_lambda(const SpectralParam& p) {
  require_valid(p);
  double sqrtE = std::sqrt(p.energy);
  Complex lam = p.lambda;
  Complex inv = 1.0 / lam;
  ZetaVector z;
  z.zeta1 = (lam + inv) * (sqrtE / 2.0);
  z.zeta2 = (inv - lam) * Complex(0.0, sqrtE / 2.0);
  return z;
}

Complex lambda_from_zeta(const ZetaVector& z, double energy) {
  if (!(energy > 0.0))
    throw std::invalid_argument("lambda_from_zeta: energy must be positive");
  Complex dot = z.zeta1 * z.zeta1 + z.zeta2 * z.zeta2;
  if (std::abs(dot - energy) > 1e-10 * energy)
    throw std::invalid_argument(
        "lambda_from_zeta: zeta . zeta != E beyond tolerance");
  return (z.zeta1 + Complex(0.0, 1.0) * z.zeta2) / std::sqrt(energy);
}

ReducedZeta reduce_zeta(const ZetaVector& z) {
  Complex dot = z.zeta1 * z.zeta1 + z.zeta2 * z.zeta2;
  double energy = dot.real();
  if (!(energy > 0.0) || std::abs(dot.imag()) > 1e-10 * energy)
    throw std::invalid_argument("reduce_zeta: zeta . zeta must be positive real");

  double re1 = z.zeta1.real(), re2 = z.zeta2.real();
  double im1 = z.zeta1.imag(), im2 = z.zeta2.imag();
  double k2 = std::hypot(im1, im2);
  if (k2 == 0.0)
    throw std::domain_error(
        "reduce_zeta: Im(zeta) = 0 (physical scattering regime unsupported)");

  // The rotation by theta must carry Im(zeta) onto (0, k2). Writing
  // beta = atan2(im2, im1), the angle is theta = pi/2 - beta (mod 2 pi),
  // taken in (-pi, pi]. Re(zeta) is orthogonal to Im(zeta) (zeta . zeta is
  // real), so it lands on (k1, 0) with k1 its signed component along the
  // direction (sin beta, -cos beta).
  double beta = std::atan2(im2, im1);
  double theta = M_PI / 2.0 - beta;
  if (theta > M_PI) theta -= 2.0 * M_PI;
  if (theta <= -M_PI) theta += 2.0 * M_PI;
  double k1 = re1 * std::sin(beta) - re2 * std::cos(beta);

  ReducedZeta red;
  red.k1 = k1;
  red.k2 = k2;
  red.theta = theta;
  red.energy = energy;
  return red;
}

Complex e_lambda(Complex z, const SpectralParam& p) {
  // The exponent i sqrt(E)/2 (lambda conj z + conj(lambda) z + z/lambda
  // + conj(z/lambda)) collapses to i sqrt(E) (Re(lambda conj z) + Re(z/lambda)).
  double sqrtE = std::sqrt(p.energy);
  double phase =
      sqrtE * ((p.lambda * std::conj(z)).real() + (z / p.lambda).real());
  return std::polar(1.0, phase);
}

Complex e_minus_lambda(Complex z, const SpectralParam& p) {
  return std::conj(e_lambda(z, p));
}

}  // namespace pescat
