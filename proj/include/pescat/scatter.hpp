#pragma once

#include <vector>

#include "pescat/ls.hpp"

namespace pescat {

struct ScatteringSample {
  Complex lambda;
  double alpha = 0.0;
  Complex t;
  bool converged = false;
  int gmres_iterations = 0;
  double ls_res = 0.0;
};

// t(lambda) = h^2 sum_z e_lambda(z) q(z) mu(z, lambda) over the grid
// (q is supported in the unit disk, so the sum is the integral over the
// support to O(h^2)). An unconverged field still yields a value; the flag
// travels with the sample.
Complex scattering_transform(const CgoField& field,
                             const std::vector<double>& q,
                             const SpectralParam& p);

// Born linearization: mu replaced by 1.
Complex born_approx(const TorusGrid& grid, const std::vector<double>& q,
                    const SpectralParam& p);

// Per-lambda detail of a d-bar residual evaluation.
struct DbarDiagnostics {
  std::vector<Complex> lambdas;  // the 9 stencil parameters
  std::vector<bool> converged;   // per solve
  Complex t;                     // t(lambda) at the center
  double residual = 0.0;
};

// || dbar_lambda mu - sgn(|lambda|-1) t(lambda)/(4 pi conj(lambda))
//    e_{-lambda} conj(mu) ||_{L^2(D(0,1))}
// with dbar_lambda mu formed from five-point stencils (coefficients
// (-1, 8, -8, 1)/(12 dlambda) per axis, dbar = (d_l1 + i d_l2)/2) over
// LS solves at the 9 parameters lambda, lambda +- dlambda, +- 2 dlambda,
// +- i dlambda, +- 2i dlambda. All stencil parameters must stay outside the
// unit-circle exclusion band. Throws std::runtime_error listing the failing
// lambda when any component solve does not converge.
double dbar_residual(const SpectralParam& p, double dlambda,
                     const PotentialSpec& q, int M, double s = 2.1,
                     double cutoff = 2.05, int workers = 0,
                     double ls_tol = 1e-9, DbarDiagnostics* diag = nullptr);

}  // namespace pescat
