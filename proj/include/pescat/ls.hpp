#pragma once

#include <vector>

#include "pescat/green.hpp"
#include "pescat/potentials.hpp"

namespace pescat {

// Uniform grid over the square [-s, s)^2 with 2^M nodes per side, stored in
// FFT index order: node (i1, i2) at (wrap(i1) h, wrap(i2) h) with
// wrap(i) = i < n/2 ? i : i - n, flattened as i1 * n + i2. Requires s > 2
// so that unit-disk supported convolutions never wrap.
struct TorusGrid {
  int M = 0;
  double s = 0.0;

  int n() const { return 1 << M; }
  double h() const { return 2.0 * s / n(); }
  double coord(int i) const { return (i < n() / 2 ? i : i - n()) * h(); }
  Complex node(int i1, int i2) const { return {coord(i1), coord(i2)}; }
  std::size_t size() const {
    return static_cast<std::size_t>(n()) * static_cast<std::size_t>(n());
  }
};

// Faddeev kernel truncated to |z| <= cutoff (origin sample 0) with its 2-D
// transform precomputed for repeated convolutions.
struct PeriodizedKernel {
  TorusGrid grid;
  Complex lambda;
  double energy = 0.0;
  std::vector<Complex> values;
  std::vector<Complex> values_hat;
};

// CGO field mu on the torus grid with the solver report attached;
// report.converged == false marks proximity to an exceptional point,
// not a failure.
struct CgoField {
  TorusGrid grid;
  Complex lambda;
  double energy = 0.0;
  std::vector<Complex> mu;
  SolveReport report;
};

// Samples a real potential on the torus grid.
std::vector<double> potential_grid(const TorusGrid& grid,
                                   const PotentialSpec& spec);

// Hard truncation of the sampled Green grid at Euclidean radius `cutoff`
// (must be < s; throws std::invalid_argument on geometry mismatch). With
// cutoff >= 2 and sources/targets in the unit disk the truncation is exact.
PeriodizedKernel periodize_green(const GreenGrid& g, double cutoff);

// Discrete convolution (kernel * f)(z) = h^2 sum kernel(z - z') f(z') via the
// precomputed transform.
std::vector<Complex> convolve(const PeriodizedKernel& kernel,
                              const std::vector<Complex>& f);

// Solves mu = 1 - kernel * (q mu) for m = mu - 1 by GMRES (restart 50,
// maxit 400 total iterations) with the transform-accelerated operator;
// q == 0 returns mu == 1 exactly with zero iterations. Nonconvergence is
// recorded in the report, never thrown.
CgoField ls_solve(const PeriodizedKernel& kernel, const std::vector<double>& q,
                  double tol = 1e-7);

// || mu - 1 + kernel * (q mu) ||_2 / || mu ||_2 on the grid.
double ls_residual(const CgoField& field, const PeriodizedKernel& kernel,
                   const std::vector<double>& q);

}  // namespace pescat
