#include "pescat/numerics/gmres.hpp"

#include <cmath>
#include <stdexcept>

namespace pescat {

namespace {

using Complex = std::complex<double>;

double norm2(const CVector& v) {
  long double s = 0.0L;
  for (const Complex& c : v) s += std::norm(c);
  return static_cast<double>(std::sqrt(s));
}

Complex dotc(const CVector& a, const CVector& b) {  // <a, b> = sum conj(a) b
  long double re = 0.0L, im = 0.0L;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Complex t = std::conj(a[i]) * b[i];
    re += t.real();
    im += t.imag();
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

void check_finite(const CVector& v) {
  for (const Complex& c : v)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw std::runtime_error(
          "gmres_solve: operator produced a non-finite value");
}

// Complex Givens rotation zeroing g against f: c real, s complex with
// [c s; -conj(s) c] [f; g] = [r; 0].
void make_givens(Complex f, Complex g, double& c, Complex& s) {
  double fa = std::abs(f);
  double ga = std::abs(g);
  if (ga == 0.0) {
    c = 1.0;
    s = 0.0;
  } else if (fa == 0.0) {
    c = 0.0;
    s = std::conj(g) / ga;
  } else {
    double r = std::hypot(fa, ga);
    c = fa / r;
    s = (f / fa) * std::conj(g) / r;
  }
}

}  // namespace

std::pair<CVector, SolveReport> gmres_solve(
    const std::function<CVector(const CVector&)>& apply, const CVector& rhs,
    double tol, int restart, int maxit) {
  if (!(tol > 0.0)) throw std::invalid_argument("gmres_solve: tol must be > 0");
  if (restart < 1)
    throw std::invalid_argument("gmres_solve: restart must be >= 1");
  if (maxit < 1) throw std::invalid_argument("gmres_solve: maxit must be >= 1");

  const std::size_t n = rhs.size();
  SolveReport report;
  CVector x(n, Complex(0.0));
  const double bnorm = norm2(rhs);
  if (bnorm == 0.0) {
    report.converged = true;
    return {x, report};
  }

  bool x_is_zero = true;
  bool stalled = false;
  while (report.iterations < maxit && !stalled) {
    // Exact residual at every cycle boundary: convergence is declared only
    // from ||rhs - A x|| / ||rhs||, never from the rotation estimate.
    CVector r(n);
    if (x_is_zero) {
      r = rhs;
    } else {
      CVector ax = apply(x);
      check_finite(ax);
      for (std::size_t i = 0; i < n; ++i) r[i] = rhs[i] - ax[i];
    }
    double rnorm = norm2(r);
    report.final_residual = rnorm / bnorm;
    if (report.final_residual <= tol) {
      report.converged = true;
      return {x, report};
    }

    const int m = restart;
    std::vector<CVector> V;
    V.reserve(m + 1);
    for (Complex& c : r) c /= rnorm;
    V.push_back(std::move(r));

    std::vector<std::vector<Complex>> H(m + 1, std::vector<Complex>(m));
    std::vector<double> cs(m, 0.0);
    std::vector<Complex> sn(m);
    std::vector<Complex> g(m + 1);
    g[0] = rnorm;

    int k = 0;  // columns completed this cycle
    bool breakdown = false;
    while (k < m && report.iterations < maxit) {
      int j = k;
      ++report.iterations;
      CVector w = apply(V[j]);
      check_finite(w);
      for (int i = 0; i <= j; ++i) {  // modified Gram-Schmidt
        Complex hij = dotc(V[i], w);
        H[i][j] = hij;
        const CVector& vi = V[i];
        for (std::size_t t = 0; t < n; ++t) w[t] -= hij * vi[t];
      }
      double hnext = norm2(w);
      H[j + 1][j] = hnext;

      for (int i = 0; i < j; ++i) {
        Complex hi = H[i][j];
        Complex hi1 = H[i + 1][j];
        H[i][j] = cs[i] * hi + sn[i] * hi1;
        H[i + 1][j] = -std::conj(sn[i]) * hi + cs[i] * hi1;
      }
      make_givens(H[j][j], H[j + 1][j], cs[j], sn[j]);
      H[j][j] = cs[j] * H[j][j] + sn[j] * H[j + 1][j];
      H[j + 1][j] = 0.0;
      g[j + 1] = -std::conj(sn[j]) * g[j];
      g[j] = cs[j] * g[j];
      ++k;

      if (hnext == 0.0) {
        breakdown = true;  // exact subspace; solve and fall to the outer check
        break;
      }
      for (Complex& c : w) c /= hnext;
      V.push_back(std::move(w));
      if (std::abs(g[k]) / bnorm <= tol) break;
    }

    // Back-substitute H(0..k-1, 0..k-1) y = g(0..k-1); a zero pivot truncates
    // the usable subspace (zero / rank-deficient operator).
    int kk = k;
    for (int i = 0; i < kk; ++i)
      if (std::abs(H[i][i]) == 0.0) kk = i;
    std::vector<Complex> y(kk);
    for (int i = kk - 1; i >= 0; --i) {
      Complex sum = g[i];
      for (int j = i + 1; j < kk; ++j) sum -= H[i][j] * y[j];
      y[i] = sum / H[i][i];
    }
    for (int i = 0; i < kk; ++i) {
      const CVector& vi = V[i];
      for (std::size_t t = 0; t < n; ++t) x[t] += y[i] * vi[t];
    }
    if (kk > 0) x_is_zero = false;
    // Breakdown with nothing usable means the operator cannot make progress
    // (e.g. identically zero); further cycles would repeat verbatim.
    if (breakdown && kk == 0) stalled = true;
  }

  // Final exact residual for the report.
  CVector ax = apply(x);
  check_finite(ax);
  CVector r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = rhs[i] - ax[i];
  report.final_residual = norm2(r) / bnorm;
  report.converged = report.final_residual <= tol;
  return {x, report};
}

}  // namespace pescat
