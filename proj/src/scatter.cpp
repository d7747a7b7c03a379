#include "pescat/scatter.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pescat {

namespace {

void require_matching(const Complex& have_lambda, double have_energy,
                      const SpectralParam& p, const char* who) {
  if (have_lambda != p.lambda || have_energy != p.energy)
    throw std::invalid_argument(std::string(who) +
                                ": spectral parameter mismatch");
}

}  // namespace

Complex scattering_transform(const CgoField& field,
                             const std::vector<double>& q,
                             const SpectralParam& p) {
  require_matching(field.lambda, field.energy, p, "scattering_transform");
  if (q.size() != field.mu.size())
    throw std::invalid_argument("scattering_transform: size mismatch");
  const int n = field.grid.n();
  long double acc_re = 0.0L, acc_im = 0.0L;
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2) {
      std::size_t idx = static_cast<std::size_t>(i1) * n + i2;
      if (q[idx] == 0.0) continue;
      Complex term = e_lambda(field.grid.node(i1, i2), p) * q[idx] * field.mu[idx];
      acc_re += term.real();
      acc_im += term.imag();
    }
  const double w = field.grid.h() * field.grid.h();
  return Complex(static_cast<double>(acc_re) * w,
                 static_cast<double>(acc_im) * w);
}

Complex born_approx(const TorusGrid& grid, const std::vector<double>& q,
                    const SpectralParam& p) {
  if (q.size() != grid.size())
    throw std::invalid_argument("born_approx: size mismatch");
  const int n = grid.n();
  long double acc_re = 0.0L, acc_im = 0.0L;
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2) {
      std::size_t idx = static_cast<std::size_t>(i1) * n + i2;
      if (q[idx] == 0.0) continue;
      Complex term = e_lambda(grid.node(i1, i2), p) * q[idx];
      acc_re += term.real();
      acc_im += term.imag();
    }
  const double w = grid.h() * grid.h();
  return Complex(static_cast<double>(acc_re) * w,
                 static_cast<double>(acc_im) * w);
}

double dbar_residual(const SpectralParam& p, double dlambda,
                     const PotentialSpec& q, int M, double s, double cutoff,
                     int workers, double ls_tol, DbarDiagnostics* diag) {
  if (!(dlambda > 0.0))
    throw std::invalid_argument("dbar_residual: dlambda must be positive");

  // Stencil order: center, then the real-axis offsets +-1, +-2, then the
  // imaginary-axis offsets +-i, +-2i (in units of dlambda).
  const Complex offsets[9] = {
      {0.0, 0.0}, {1.0, 0.0},  {-1.0, 0.0}, {2.0, 0.0},  {-2.0, 0.0},
      {0.0, 1.0}, {0.0, -1.0}, {0.0, 2.0},  {0.0, -2.0},
  };
  std::vector<Complex> lambdas(9);
  for (int j = 0; j < 9; ++j) lambdas[j] = p.lambda + dlambda * offsets[j];
  for (const Complex& l : lambdas)
    if (in_exclusion_band(l)) {
      std::ostringstream msg;
      msg << "dbar_residual: stencil parameter " << l
          << " lies inside the unit-circle exclusion band";
      throw std::invalid_argument(msg.str());
    }

  std::vector<CgoField> fields(9);
  std::vector<double> qgrid;
  for (int j = 0; j < 9; ++j) {
    SpectralParam pj{lambdas[j], p.energy};
    GreenGrid g = green_grid(pj, M, s, workers);
    PeriodizedKernel kernel = periodize_green(g, cutoff);
    if (qgrid.empty()) qgrid = potential_grid(kernel.grid, q);
    fields[j] = ls_solve(kernel, qgrid, ls_tol);
  }

  if (diag) {
    diag->lambdas = lambdas;
    diag->converged.assign(9, false);
    for (int j = 0; j < 9; ++j) diag->converged[j] = fields[j].report.converged;
  }
  for (int j = 0; j < 9; ++j)
    if (!fields[j].report.converged) {
      std::ostringstream msg;
      msg << "dbar_residual: solve at lambda = " << lambdas[j]
          << " did not converge (residual " << fields[j].report.final_residual
          << ")";
      throw std::runtime_error(msg.str());
    }

  const Complex t = scattering_transform(fields[0], qgrid, p);
  if (diag) diag->t = t;

  const TorusGrid& grid = fields[0].grid;
  const int n = grid.n();
  const double sign = std::abs(p.lambda) > 1.0 ? 1.0 : -1.0;
  const Complex factor = sign * t / (4.0 * M_PI * std::conj(p.lambda));
  const Complex half_i(0.0, 0.5);

  long double acc = 0.0L;
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2) {
      Complex z = grid.node(i1, i2);
      if (std::abs(z) > 1.0) continue;  // residual is read on the unit disk
      std::size_t idx = static_cast<std::size_t>(i1) * n + i2;
      Complex d_re = (-fields[3].mu[idx] + 8.0 * fields[1].mu[idx] -
                      8.0 * fields[2].mu[idx] + fields[4].mu[idx]) /
                     (12.0 * dlambda);
      Complex d_im = (-fields[7].mu[idx] + 8.0 * fields[5].mu[idx] -
                      8.0 * fields[6].mu[idx] + fields[8].mu[idx]) /
                     (12.0 * dlambda);
      Complex dbar_mu = 0.5 * d_re + half_i * d_im;
      Complex rhs = factor * e_minus_lambda(z, p) * std::conj(fields[0].mu[idx]);
      acc += static_cast<long double>(std::norm(dbar_mu - rhs));
    }
  const double w = grid.h() * grid.h();
  double residual = std::sqrt(static_cast<double>(acc) * w);
  if (diag) diag->residual = residual;
  return residual;
}

}  // namespace pescat
