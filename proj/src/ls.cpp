#include "pescat/ls.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pescat/numerics/fft2.hpp"
#include "pescat/numerics/gmres.hpp"

namespace pescat {

std::vector<double> potential_grid(const TorusGrid& grid,
                                   const PotentialSpec& spec) {
  const int n = grid.n();
  std::vector<double> q(grid.size());
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2)
      q[static_cast<std::size_t>(i1) * n + i2] =
          eval_potential(grid.node(i1, i2), spec);
  return q;
}

PeriodizedKernel periodize_green(const GreenGrid& g, double cutoff) {
  if (!(cutoff > 0.0) || cutoff >= g.s)
    throw std::invalid_argument(
        "periodize_green: cutoff must lie in (0, s)");
  PeriodizedKernel kernel;
  kernel.grid = TorusGrid{g.M, g.s};
  kernel.lambda = g.lambda;
  kernel.energy = g.energy;
  const int n = kernel.grid.n();
  if (g.samples.size() != kernel.grid.size())
    throw std::invalid_argument("periodize_green: malformed sample grid");
  kernel.values.assign(g.samples.begin(), g.samples.end());
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2)
      if (std::hypot(kernel.grid.coord(i1), kernel.grid.coord(i2)) > cutoff)
        kernel.values[static_cast<std::size_t>(i1) * n + i2] = Complex(0.0);
  kernel.values_hat = fft2(kernel.values, n);
  return kernel;
}

std::vector<Complex> convolve(const PeriodizedKernel& kernel,
                              const std::vector<Complex>& f) {
  const int n = kernel.grid.n();
  if (f.size() != kernel.grid.size())
    throw std::invalid_argument("convolve: operand size mismatch");
  CGrid work(f);
  fft2_inplace(work, n);
  for (std::size_t i = 0; i < work.size(); ++i) work[i] *= kernel.values_hat[i];
  ifft2_inplace(work, n);
  const double w = kernel.grid.h() * kernel.grid.h();
  for (auto& v : work) v *= w;
  return work;
}

CgoField ls_solve(const PeriodizedKernel& kernel, const std::vector<double>& q,
                  double tol) {
  if (q.size() != kernel.grid.size())
    throw std::invalid_argument("ls_solve: potential size mismatch");
  if (!(tol > 0.0)) throw std::invalid_argument("ls_solve: tol must be > 0");

  CgoField field;
  field.grid = kernel.grid;
  field.lambda = kernel.lambda;
  field.energy = kernel.energy;

  const bool zero_potential =
      std::all_of(q.begin(), q.end(), [](double v) { return v == 0.0; });
  if (zero_potential) {
    field.mu.assign(kernel.grid.size(), Complex(1.0));
    field.report.iterations = 0;
    field.report.final_residual = 0.0;
    field.report.converged = true;
    return field;
  }

  // Solve (I + G Q) m = -G q for the decaying part m = mu - 1, where
  // G v = kernel * v and Q is pointwise multiplication by q.
  std::vector<Complex> qc(q.begin(), q.end());
  std::vector<Complex> rhs = convolve(kernel, qc);
  for (auto& v : rhs) v = -v;

  auto apply = [&](const CVector& m) {
    std::vector<Complex> qm(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) qm[i] = q[i] * m[i];
    std::vector<Complex> gqm = convolve(kernel, qm);
    CVector out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = m[i] + gqm[i];
    return out;
  };
  auto [m, report] = gmres_solve(apply, rhs, tol, 50, 400);

  field.mu.resize(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) field.mu[i] = 1.0 + m[i];
  field.report = report;
  return field;
}

double ls_residual(const CgoField& field, const PeriodizedKernel& kernel,
                   const std::vector<double>& q) {
  if (field.mu.size() != kernel.grid.size() || q.size() != field.mu.size())
    throw std::invalid_argument("ls_residual: size mismatch");
  std::vector<Complex> qmu(field.mu.size());
  for (std::size_t i = 0; i < field.mu.size(); ++i) qmu[i] = q[i] * field.mu[i];
  std::vector<Complex> gqmu = convolve(kernel, qmu);
  long double num = 0.0L, den = 0.0L;
  for (std::size_t i = 0; i < field.mu.size(); ++i) {
    Complex r = field.mu[i] - 1.0 + gqmu[i];
    num += static_cast<long double>(std::norm(r));
    den += static_cast<long double>(std::norm(field.mu[i]));
  }
  if (den == 0.0L) throw std::invalid_argument("ls_residual: empty field");
  return static_cast<double>(std::sqrt(num / den));
}

}  // namespace pescat
