#include "pescat/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "pescat/numerics/quadrature.hpp"
#include "pescat/numerics/special.hpp"

namespace pescat {

namespace {

// Quintic smoothstep profile p(t) = 1 - 10 t^3 + 15 t^4 - 6 t^5 and its
// derivatives; C^2 joins at t = 0 and t = 1.
double ptilde(double t) { return 1.0 + t * t * t * (-10.0 + t * (15.0 - 6.0 * t)); }
double ptilde_d(double t) {
  double u = 1.0 - t;
  return -30.0 * t * t * u * u;
}
double ptilde_dd(double t) { return -60.0 * t * (1.0 - t) * (1.0 - 2.0 * t); }

double profile(double r, double a, double b) {
  if (r <= a) return 1.0;
  if (r >= b) return 0.0;
  return ptilde((r - a) / (b - a));
}
double profile_d(double r, double a, double b) {
  if (r <= a || r >= b) return 0.0;
  double w = b - a;
  return ptilde_d((r - a) / w) / w;
}
double profile_dd(double r, double a, double b) {
  if (r <= a || r >= b) return 0.0;
  double w = b - a;
  return ptilde_dd((r - a) / w) / (w * w);
}

// Delta(sqrt(sigma)) / sqrt(sigma) from the exact piecewise-polynomial
// derivatives of sigma(r) = 1 + amp * profile(r; a, b).
double conductivity_term(double r, const PotentialSpec& spec) {
  double a = spec.sigma_R1, b = spec.sigma_R2, amp = spec.sigma_amp;
  double sig = 1.0 + amp * profile(r, a, b);
  double sig_d = amp * profile_d(r, a, b);
  double sig_dd = amp * profile_dd(r, a, b);
  double f = std::sqrt(sig);
  double fd = sig_d / (2.0 * f);
  double fdd = sig_dd / (2.0 * f) - sig_d * sig_d / (4.0 * sig * f);
  double lap = r < 1e-12 ? 2.0 * fdd : fdd + fd / r;
  return lap / f;
}

double golden_max(const std::function<double(double)>& fn, double lo,
                  double hi, int iters) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = fn(c), fd = fn(d);
  for (int i = 0; i < iters; ++i) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = fn(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = fn(d);
    }
  }
  return std::max(fc, fd);
}

// (1/4) sup over (0, 200] of |sqrt(r) Y0(r)|: 1e5-point grid scan plus
// golden-section refinement around the best grid point.
double chat_term1() {
  const int kGrid = 100000;
  const double kRmax = 200.0;
  auto score = [](double r) { return std::sqrt(r) * std::abs(bessel_y0(r)); };
  double best = 0.0, best_r = 1.0;
  for (int i = 1; i <= kGrid; ++i) {
    double r = kRmax * i / kGrid;
    double v = score(r);
    if (v > best) {
      best = v;
      best_r = r;
    }
  }
  double step = kRmax / kGrid;
  double refined = golden_max(score, std::max(1e-12, best_r - step),
                              std::min(kRmax, best_r + step), 60);
  return 0.25 * std::max(best, refined);
}

// (1/4 pi) sup over r in (0, 200] and phi0 of
// |sqrt(r) \int_{phi0}^{phi0 + pi} e^{i r sin phi} dphi|. The integral over
// a half ring is assembled from 1024 Gauss-Legendre segments of the full
// circle via prefix sums, giving all 512 phi0 starts in [0, pi) at once
// (phi0 and phi0 + pi give conjugate values, so [0, pi) covers the sup);
// the best grid point is then polished by golden section in r and phi0.
double chat_term2() {
  const int kSegments = 1024;         // segments of [0, 2 pi)
  const int kPerSegment = 8;          // GL nodes per segment
  const int kRGrid = 2000;            // log-spaced r in [1e-3, 200]
  const double kRLo = 1e-3, kRHi = 200.0;

  QuadratureRule base = gauss_legendre(kPerSegment, 0.0, 1.0);
  const double seg_width = 2.0 * M_PI / kSegments;
  std::vector<double> sin_nodes(kSegments * kPerSegment);
  for (int s = 0; s < kSegments; ++s)
    for (int k = 0; k < kPerSegment; ++k)
      sin_nodes[s * kPerSegment + k] =
          std::sin((s + base.nodes[k]) * seg_width);

  // Direct half-ring integral for the polish stage.
  auto half_ring = [](double r, double phi0) {
    QuadratureRule rule = gauss_legendre(512, phi0, phi0 + M_PI);
    double re = 0.0, im = 0.0;
    for (int i = 0; i < 512; ++i) {
      double arg = r * std::sin(rule.nodes[i]);
      re += rule.weights[i] * std::cos(arg);
      im += rule.weights[i] * std::sin(arg);
    }
    return std::sqrt(r) * std::hypot(re, im);
  };

  double best = 0.0, best_r = 1.0, best_phi0 = 0.0;
  std::vector<Complex> seg(kSegments);
  std::vector<Complex> prefix(kSegments + kSegments / 2 + 1);
  for (int ir = 0; ir <= kRGrid; ++ir) {
    double r = kRLo * std::pow(kRHi / kRLo, static_cast<double>(ir) / kRGrid);
    for (int s = 0; s < kSegments; ++s) {
      double re = 0.0, im = 0.0;
      for (int k = 0; k < kPerSegment; ++k) {
        double arg = r * sin_nodes[s * kPerSegment + k];
        re += base.weights[k] * std::cos(arg);
        im += base.weights[k] * std::sin(arg);
      }
      seg[s] = Complex(re, im) * seg_width;
    }
    prefix[0] = 0.0;
    for (int s = 0; s < kSegments + kSegments / 2; ++s)
      prefix[s + 1] = prefix[s] + seg[s % kSegments];
    double sq = std::sqrt(r);
    for (int j = 0; j < kSegments / 2; ++j) {  // phi0 = j * seg_width in [0, pi)
      double v = sq * std::abs(prefix[j + kSegments / 2] - prefix[j]);
      if (v > best) {
        best = v;
        best_r = r;
        best_phi0 = j * seg_width;
      }
    }
  }

  double rstep = best_r * (std::pow(kRHi / kRLo, 1.0 / kRGrid) - 1.0);
  for (int round = 0; round < 3; ++round) {
    double lo = std::max(kRLo, best_r - 2.0 * rstep);
    double hi = std::min(kRHi, best_r + 2.0 * rstep);
    best_r = 0.5 * (lo + hi);
    {  // golden in r at fixed phi0, tracking the argmax
      const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
      double c = hi - inv_phi * (hi - lo), d = lo + inv_phi * (hi - lo);
      double fc = half_ring(c, best_phi0), fd = half_ring(d, best_phi0);
      for (int i = 0; i < 50; ++i) {
        if (fc > fd) {
          hi = d;
          d = c;
          fd = fc;
          c = hi - inv_phi * (hi - lo);
          fc = half_ring(c, best_phi0);
        } else {
          lo = c;
          c = d;
          fc = fd;
          d = lo + inv_phi * (hi - lo);
          fd = half_ring(d, best_phi0);
        }
      }
      best_r = 0.5 * (lo + hi);
    }
    {  // golden in phi0 at fixed r
      double lo2 = best_phi0 - seg_width, hi2 = best_phi0 + seg_width;
      const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
      double c = hi2 - inv_phi * (hi2 - lo2), d = lo2 + inv_phi * (hi2 - lo2);
      double fc = half_ring(best_r, c), fd = half_ring(best_r, d);
      for (int i = 0; i < 50; ++i) {
        if (fc > fd) {
          hi2 = d;
          d = c;
          fd = fc;
          c = hi2 - inv_phi * (hi2 - lo2);
          fc = half_ring(best_r, c);
        } else {
          lo2 = c;
          c = d;
          fc = fd;
          d = lo2 + inv_phi * (hi2 - lo2);
          fd = half_ring(best_r, d);
        }
      }
      best_phi0 = 0.5 * (lo2 + hi2);
    }
  }
  best = std::max(best, half_ring(best_r, best_phi0));
  return best / (4.0 * M_PI);
}

}  // namespace

double bump_phi(double r, const RadialBump& bump) {
  if (!(bump.R1 > 0.0) || !(bump.R2 > bump.R1) || !(bump.R2 <= 1.0))
    throw std::invalid_argument("bump_phi: need 0 < R1 < R2 <= 1");
  return profile(r, bump.R1, bump.R2);
}

double eval_potential(Complex z, const PotentialSpec& spec) {
  double r = std::abs(z);
  double value = spec.alpha * bump_phi(r, spec.bump);
  if (spec.kind == PotentialKind::Q2) value += conductivity_term(r, spec);
  return value;
}

double chat() {
  static std::once_flag once;
  static double value = 0.0;
  std::call_once(once, [] { value = chat_term1() + chat_term2(); });
  return value;
}

double smallness_bound(double epsilon) {
  if (!(epsilon > 0.0))
    throw std::invalid_argument("smallness_bound: epsilon must be positive");
  double d_eps = 2.0 * M_PI / ((1.0 + epsilon) * epsilon);
  return 1.0 / (chat() * (4.0 * M_PI / 3.0 + d_eps));
}

}  // namespace pescat
