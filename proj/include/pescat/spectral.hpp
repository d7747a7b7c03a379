#pragma once

#include <complex>

namespace pescat {

using Complex = std::complex<double>;

// Half-width of the rejected band around the unit circle | |lambda|-1 |.
inline constexpr double kExclusionBand = 0.005;

struct SpectralParam {
  Complex lambda;
  double energy = 1.0;
};

// Components of zeta in C^2 with zeta . zeta = E.
struct ZetaVector {
  Complex zeta1;
  Complex zeta2;
};

// Rotation-canonical form [k1, 0] + i [0, k2] with k1^2 - k2^2 = energy,
// |k1| > k2 > 0. theta is the plane rotation (radians, in (-pi, pi]) that
// maps zeta onto the canonical form.
struct ReducedZeta {
  double k1 = 0.0;
  double k2 = 0.0;
  double theta = 0.0;
  double energy = 0.0;
};

bool in_exclusion_band(Complex lambda, double band = kExclusionBand);

// zeta1 = (lambda + 1/lambda) sqrt(E)/2, zeta2 = (1/lambda - lambda) i sqrt(E)/2.
// Requires lambda != 0 and |lambda| outside the exclusion band
// (throws std::invalid_argument).
ZetaVector zeta_from_lambda(const SpectralParam& p);

// Inverse map lambda = (zeta1 + i zeta2)/sqrt(E). Rejects inputs with
// zeta . zeta != E beyond 1e-10 relative (throws std::invalid_argument).
Complex lambda_from_zeta(const ZetaVector& z, double energy);

// Rotation reduction. Requires Im(zeta) != 0 (throws std::domain_error:
// physical-scattering regime unsupported) and zeta . zeta = E > 0.
ReducedZeta reduce_zeta(const ZetaVector& z);

// e_lambda(z) = exp(i sqrt(E)/2 (lambda conj(z) + conj(lambda) z
//                               + z/lambda + conj(z)/conj(lambda))),
// a unimodular phase; e_{-lambda} is its conjugate.
Complex e_lambda(Complex z, const SpectralParam& p);
Complex e_minus_lambda(Complex z, const SpectralParam& p);

}  // namespace pescat
