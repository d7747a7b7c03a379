#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace pescat {

struct SolveReport {
  int iterations = 0;
  double final_residual = 0.0;
  bool converged = false;
};

using CVector = std::vector<std::complex<double>>;

// Restarted GMRES for a matrix-free linear operator on complex vectors.
// Stops when ||apply(x) - rhs||_2 / ||rhs||_2 <= tol; `maxit` caps the total
// iteration count across restarts. Exhausting maxit returns converged=false
// rather than throwing; NaN in the operator output throws std::runtime_error.
std::pair<CVector, SolveReport> gmres_solve(
    const std::function<CVector(const CVector&)>& apply, const CVector& rhs,
    double tol, int restart, int maxit);

}  // namespace pescat
