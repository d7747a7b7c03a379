// Acceptance gate: one self-contained check per shipped guarantee. Each
// criterion prints a single [PASS]/[FAIL] line with its key numbers and
// runtime; the exit status is the number of failed criteria.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pescat/green.hpp"
#include "pescat/ls.hpp"
#include "pescat/numerics/special.hpp"
#include "pescat/potentials.hpp"
#include "pescat/scatter.hpp"
#include "pescat/spectral.hpp"
#include "pescat/sweep.hpp"

namespace {

using pescat::Complex;
using pescat::ContourVariant;
using pescat::ReducedZeta;
using pescat::SpectralParam;

std::string fmtg(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

struct Check {
  bool pass = true;
  std::string detail;

  void append(const std::string& text) {
    if (!detail.empty()) detail += "; ";
    detail += text;
  }
  void note(const std::string& text) { append(text); }
  void require(bool ok, const std::string& why) {
    if (!ok) {
      pass = false;
      append("FAILED: " + why);
    }
  }
};

std::uint64_t bits(double v) { return std::bit_cast<std::uint64_t>(v); }

// ---- 1: the three contour representations agree where they overlap --------

Check c01_cross_agreement() {
  Check ck;
  std::mt19937 rng(101);
  std::uniform_real_distribution<double> pos(0.5, 2.5);
  std::uniform_real_distribution<double> neg(-2.5, -0.5);
  double worst12 = 0.0, worst13 = 0.0;
  // Each representation is calibrated at the comparison point itself, so the
  // check isolates formula agreement from sector-tuned node budgets.
  auto at = [](const pescat::GreenEvaluator& ev, Complex z, ContourVariant v) {
    int panels = pescat::calibrate_panels(ev.reduced(), v, z);
    return pescat::eval_contour(z, ev.reduced(), v, panels);
  };
  for (Complex lambda : {Complex(1.5, 0.0), Complex(2.0, 0.0), Complex(1.0, 1.0)}) {
    pescat::GreenEvaluator ev(SpectralParam{lambda, 1.0});
    for (int k = 0; k < 20; ++k) {
      Complex z(pos(rng), pos(rng));
      Complex a = at(ev, z, ContourVariant::T1);
      Complex b = at(ev, z, ContourVariant::T2);
      worst12 = std::max(worst12, std::abs(a - b));
    }
    for (int k = 0; k < 20; ++k) {
      Complex z(pos(rng), neg(rng));
      Complex a = at(ev, z, ContourVariant::T1);
      Complex b = at(ev, z, ContourVariant::T3);
      worst13 = std::max(worst13, std::abs(a - b));
    }
  }
  ck.require(worst12 <= 1e-6, "T1 vs T2 deviation " + fmtg(worst12) + " > 1e-6");
  ck.require(worst13 <= 1e-6, "T1 vs T3 deviation " + fmtg(worst13) + " > 1e-6");
  ck.note("T1 vs T2 max " + fmtg(worst12) + ", T1 vs T3 max " + fmtg(worst13) +
          " over 20 points x 3 lambda");
  return ck;
}

// ---- 2: doubling every truncation limit leaves the values in place --------

Check c02_truncation() {
  Check ck;
  std::mt19937 rng(202);
  std::uniform_real_distribution<double> pos(0.5, 2.5);
  std::uniform_real_distribution<double> neg(-2.5, -0.5);
  std::uniform_real_distribution<double> sym(-2.0, 2.0);
  double worst = 0.0;
  for (Complex lambda : {Complex(2.0, 0.0), Complex(1.0, 1.0)}) {
    pescat::GreenEvaluator ev(SpectralParam{lambda, 1.0});
    const ReducedZeta& red = ev.reduced();
    for (ContourVariant v :
         {ContourVariant::T1, ContourVariant::T2, ContourVariant::T3}) {
      for (int k = 0; k < 20; ++k) {
        double x1 = pos(rng);
        double x2 = v == ContourVariant::T1
                        ? sym(rng)
                        : (v == ContourVariant::T2 ? pos(rng) : neg(rng));
        Complex z(x1, x2);
        Complex base = ev.eval_contour_calibrated(z, v);
        // Doubled limits at matched node density isolate the tail change.
        Complex wide = pescat::eval_contour(z, red, v, 2 * ev.panels(v), 2.0);
        worst = std::max(worst, std::abs(base - wide));
      }
    }
  }
  ck.require(worst <= 1e-7, "doubled-limit change " + fmtg(worst) + " > 1e-7");
  ck.note("max change " + fmtg(worst) + " over 20 points x 3 variants x 2 lambda");
  return ck;
}

// ---- 3: the sampled field satisfies its governing equation ----------------

Check c03_pde_residual() {
  Check ck;
  // Annulus points chosen away from the region seams and sector rays so the
  // +-2h stencil stays inside one smooth dispatch region.
  const struct {
    double r, angle, lambda;
  } pts[10] = {{1.3, 0.0, 2.0},  {1.5, 0.8, 2.0},   {1.7, 1.2, 2.0},
               {1.9, 2.0, 2.0},  {2.1, 2.9, 2.0},   {1.4, -0.8, 1.5},
               {1.6, -1.2, 1.5}, {1.8, -2.0, 1.5},  {2.7, 0.25, 1.5},
               {3.0, -2.9, 1.5}};
  const double h = 1e-3;
  double worst = 0.0;
  for (const auto& pt : pts) {
    SpectralParam p{Complex(pt.lambda, 0.0), 1.0};
    pescat::ZetaVector zeta = pescat::zeta_from_lambda(p);
    Complex z0 = std::polar(pt.r, pt.angle);
    auto f = [&](double dx, double dy) {
      return pescat::green_eval(z0 + Complex(dx, dy), p);
    };
    Complex c0 = f(0, 0);
    Complex fx1 = f(h, 0), fx2 = f(2 * h, 0), fm1 = f(-h, 0), fm2 = f(-2 * h, 0);
    Complex fy1 = f(0, h), fy2 = f(0, 2 * h), gm1 = f(0, -h), gm2 = f(0, -2 * h);
    Complex gx = (-fx2 + 8.0 * fx1 - 8.0 * fm1 + fm2) / (12.0 * h);
    Complex gy = (-fy2 + 8.0 * fy1 - 8.0 * gm1 + gm2) / (12.0 * h);
    Complex gxx =
        (-fx2 + 16.0 * fx1 - 30.0 * c0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
    Complex gyy =
        (-fy2 + 16.0 * fy1 - 30.0 * c0 + 16.0 * gm1 - gm2) / (12.0 * h * h);
    Complex lap = gxx + gyy;
    Complex drift =
        2.0 * Complex(0.0, 1.0) * (zeta.zeta1 * gx + zeta.zeta2 * gy);
    double scale = std::abs(lap) + std::abs(drift);
    ck.require(scale > 0.0, "degenerate stencil scale");
    if (scale > 0.0) worst = std::max(worst, std::abs(lap + drift) / scale);
  }
  ck.require(worst <= 1e-3, "relative residual " + fmtg(worst) + " > 1e-3");
  ck.note("max relative residual " + fmtg(worst) + " at 10 annulus points");
  return ck;
}

// ---- 4: reciprocal-conjugate spectral symmetry -----------------------------

Check c04_conjugation() {
  Check ck;
  std::mt19937 rng(404);
  std::uniform_real_distribution<double> rho(1.1, 2.8);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  std::uniform_real_distribution<double> radius(0.3, 2.0);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    Complex lambda = std::polar(rho(rng), angle(rng));
    Complex z = std::polar(radius(rng), angle(rng));
    Complex lhs = pescat::green_eval(z, {1.0 / std::conj(lambda), 1.0});
    Complex rhs = std::conj(pescat::green_eval(-z, {lambda, 1.0}));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  ck.require(worst <= 1e-6, "symmetry deviation " + fmtg(worst) + " > 1e-6");
  ck.note("max deviation " + fmtg(worst) + " over 20 (z, lambda) pairs");
  return ck;
}

// ---- 5: single-layer patch: held-out boundary nodes and the inner seam ----

Check c05_single_layer() {
  Check ck;
  double worst_boundary = 0.0;
  // Real spectral parameters in (0, 1) keep the reduction rotation at zero,
  // so evaluator coordinates and layer-frame coordinates coincide.
  for (double lam : {0.5, 0.4}) {
    pescat::GreenEvaluator ev(SpectralParam{Complex(lam, 0.0), 1.0});
    ck.require(std::abs(ev.reduced().theta) < 1e-12, "unexpected rotation");
    const pescat::SingleLayerCache& layer = ev.layer();
    ck.require(layer.report.converged, "layer density solve not converged");
    const int n = pescat::SingleLayerCache::kPoints;
    const double R = pescat::SingleLayerCache::kRadius;
    const double Rp = R + pescat::SingleLayerCache::kEps;
    const double dtheta = 2.0 * M_PI / n;
    const ReducedZeta& red = ev.reduced();
    std::mt19937 rng(505);
    std::uniform_real_distribution<double> jitter(0.2, 0.8);
    for (int trial = 0; trial < 20; ++trial) {
      double phi = (17 * trial % n + jitter(rng)) * dtheta;  // off the nodes
      Complex z(R * std::cos(phi), R * std::sin(phi));
      Complex acc = 0.0;
      for (int j = 0; j < n; ++j) {
        Complex yj(Rp * std::cos(dtheta * j), Rp * std::sin(dtheta * j));
        acc += layer.density[j] *
               pescat::hankel1_0(std::sqrt(red.energy) * std::abs(z - yj));
      }
      Complex H = acc * dtheta * Rp * Complex(0.0, 0.25);
      Complex inner = H + Complex(0.0, 0.25) * pescat::hankel1_0(
                              std::sqrt(red.energy) * std::abs(z));
      Complex phase = std::exp(Complex(red.k2 * z.imag(), -red.k1 * z.real()));
      Complex direct = ev.eval(z);
      worst_boundary = std::max(worst_boundary, std::abs(phase * inner - direct));
    }
  }
  ck.require(worst_boundary <= 1e-4,
             "held-out boundary deviation " + fmtg(worst_boundary) + " > 1e-4");

  double worst_seam = 0.0;
  for (Complex lambda : {Complex(2.0, 0.0), Complex(1.0, 1.0), Complex(0.5, 0.0)}) {
    SpectralParam p{lambda, 1.0};
    for (double a : {0.3, 0.7, 1.9, -1.1, 2.9}) {
      Complex dir = std::polar(1.0, a);
      Complex in = pescat::green_eval((0.2 - 1e-9) * dir, p);
      Complex out = pescat::green_eval((0.2 + 1e-9) * dir, p);
      worst_seam = std::max(worst_seam, std::abs(in - out));
    }
  }
  ck.require(worst_seam <= 1e-3,
             "inner seam mismatch " + fmtg(worst_seam) + " > 1e-3");
  ck.note("held-out max " + fmtg(worst_boundary) + ", seam max " + fmtg(worst_seam));
  return ck;
}

// ---- 6: magnitude envelope with the numerically computed constant ---------

Check c06_magnitude() {
  Check ck;
  const double c = pescat::chat();
  std::mt19937 rng(606);
  std::uniform_real_distribution<double> outer(1.05, 3.0);
  std::uniform_real_distribution<double> inner(0.30, 0.93);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  std::uniform_real_distribution<double> radius(0.05, 2.5);
  double worst_ratio = 0.0;
  for (int k = 0; k < 50; ++k) {
    double rho = (k % 2 == 0) ? outer(rng) : inner(rng);
    Complex lambda = std::polar(rho, angle(rng));
    Complex z = std::polar(radius(rng), angle(rng));
    Complex g = pescat::green_eval(z, {lambda, 1.0});
    double bound = c / (std::sqrt(std::abs(z)) * std::sqrt(rho + 1.0 / rho));
    worst_ratio = std::max(worst_ratio, std::abs(g) / bound);
  }
  ck.require(worst_ratio <= 1.0,
             "envelope exceeded, ratio " + fmtg(worst_ratio));
  ck.note("c-hat " + fmtg(c) + ", worst |g|/bound " + fmtg(worst_ratio) +
          " over 50 samples");
  return ck;
}

// ---- 7: zero potential is exact; Born error decays quadratically ----------

Check c07_linear_limit() {
  Check ck;
  pescat::TorusGrid grid{6, 2.1};
  SpectralParam p{Complex(2.0, 0.0), 1.0};
  pescat::GreenGrid gg = pescat::green_grid(p, 6, 2.1);
  pescat::PeriodizedKernel kernel = pescat::periodize_green(gg, 2.05);

  std::vector<double> qzero(grid.size(), 0.0);
  pescat::CgoField f0 = pescat::ls_solve(kernel, qzero);
  bool exact = f0.report.converged && f0.report.iterations == 0;
  for (const Complex& m : f0.mu) exact = exact && m == Complex(1.0, 0.0);
  ck.require(exact, "q == 0 did not return mu == 1 exactly");

  double err[3] = {0, 0, 0};
  int idx = 0;
  for (double alpha : {0.1, 0.2, 0.4}) {
    pescat::PotentialSpec spec;
    spec.kind = pescat::PotentialKind::Q1;
    spec.alpha = alpha;
    std::vector<double> q = pescat::potential_grid(grid, spec);
    pescat::CgoField field = pescat::ls_solve(kernel, q, 1e-10);
    ck.require(field.report.converged, "LS solve not converged");
    Complex t = pescat::scattering_transform(field, q, p);
    Complex b = pescat::born_approx(grid, q, p);
    err[idx++] = std::abs(t - b);
  }
  double r1 = err[1] / err[0];
  double r2 = err[2] / err[1];
  ck.require(r1 >= 3.0 && r1 <= 5.0,
             "ratio 0.2/0.1 = " + fmtg(r1) + " outside [3, 5]");
  ck.require(r2 >= 3.0 && r2 <= 5.0,
             "ratio 0.4/0.2 = " + fmtg(r2) + " outside [3, 5]");
  ck.note("Born error ratios " + fmtg(r1) + ", " + fmtg(r2) + " (ideal 4)");
  return ck;
}

// ---- 8: transform symmetries at M = 7 --------------------------------------

Check c08_transform_symmetries() {
  Check ck;
  const int M = 7;
  const double s = 2.1, cutoff = 2.05;
  pescat::PotentialSpec spec;
  spec.kind = pescat::PotentialKind::Q1;
  spec.alpha = -5.0;
  pescat::TorusGrid grid{M, s};
  std::vector<double> q = pescat::potential_grid(grid, spec);
  auto tk = [&](Complex lambda) {
    SpectralParam p{lambda, 1.0};
    pescat::GreenGrid gg = pescat::green_grid(p, M, s);
    pescat::PeriodizedKernel kernel = pescat::periodize_green(gg, cutoff);
    pescat::CgoField field = pescat::ls_solve(kernel, q, 1e-9);
    ck.require(field.report.converged, "LS solve not converged");
    return pescat::scattering_transform(field, q, p);
  };

  double worst_imag = 0.0, worst_recip = 0.0;
  Complex t2;
  for (double r : {1.5, 2.0, 3.0}) {
    Complex tr = tk(Complex(r, 0.0));
    if (r == 2.0) t2 = tr;
    worst_imag = std::max(worst_imag,
                          std::abs(tr.imag()) / std::max(1.0, std::abs(tr)));
    Complex ti = tk(Complex(1.0 / r, 0.0));
    ck.require(std::abs(tr) > 0.0, "vanishing transform value");
    worst_recip = std::max(worst_recip, std::abs(ti - tr) / std::abs(tr));
  }
  ck.require(worst_imag <= 1e-4, "imaginary part ratio " + fmtg(worst_imag));
  ck.require(worst_recip <= 1e-3,
             "reciprocal asymmetry " + fmtg(worst_recip) + " > 1e-3");

  Complex trot = tk(std::polar(2.0, M_PI / 3.0));
  double rot_rel = std::abs(trot - t2) / std::abs(t2);
  ck.require(rot_rel <= 1e-3, "rotation asymmetry " + fmtg(rot_rel) + " > 1e-3");
  ck.note("imag ratio " + fmtg(worst_imag) + ", reciprocal " + fmtg(worst_recip) +
          ", rotation " + fmtg(rot_rel));
  return ck;
}

// ---- 9: dbar-relation residual levels and refinement behavior -------------

Check c09_dbar() {
  Check ck;
  pescat::PotentialSpec spec;
  spec.kind = pescat::PotentialKind::Q2;
  spec.alpha = 0.0;
  const double dl = 1e-4;

  // Near the unit circle the residual stays bounded: the per-parameter
  // quadrature calibration keeps the kernel accurate there, so only a broad
  // sanity window is asserted (the level is set by the LS discretization).
  std::string anchor;
  for (int M : {7, 8, 9}) {
    double r = pescat::dbar_residual({Complex(1.01, 0.0), 1.0}, dl, spec, M);
    ck.require(r >= 1e-6 && r <= 130.0,
               "residual " + fmtg(r) + " at M=" + std::to_string(M) +
                   " outside [1e-6, 130]");
    if (!anchor.empty()) anchor += "/";
    anchor += fmtg(r);
  }

  // Away from the unit circle the residual must decrease strictly with M.
  bool monotone = true;
  for (double lam : {1.2, 1.5, 2.0, 2.5, 3.0}) {
    double prev = 0.0;
    for (int M : {7, 8, 9}) {
      double r = pescat::dbar_residual({Complex(lam, 0.0), 1.0}, dl, spec, M);
      if (M > 7 && r >= prev) {
        monotone = false;
        ck.require(false, "residual not decreasing at lambda=" + fmtg(lam) +
                              ", M=" + std::to_string(M));
      }
      prev = r;
    }
  }
  ck.note("lambda=1.01 residuals " + anchor + (monotone
          ? ", strictly decreasing in M at 5 lambda >= 1.2" : ""));
  return ck;
}

// ---- 10: exceptional-point structure of the desk-scale sweep --------------

Check c10_exceptional_structure() {
  Check ck;
  auto desk = [](pescat::PotentialKind kind) {
    pescat::SweepConfig cfg;  // defaults are the desk preset
    cfg.potential.kind = kind;
    return pescat::run_sweep(cfg);
  };
  pescat::SweepReport rq1 = desk(pescat::PotentialKind::Q1);
  pescat::SweepReport rq2 = desk(pescat::PotentialKind::Q2);

  auto count_at = [&ck](const pescat::SweepReport& r, double alpha) {
    for (std::size_t ai = 0; ai < r.alphas.size(); ++ai)
      if (r.alphas[ai] == alpha) return r.brackets[ai].size();
    ck.require(false, "alpha row " + fmtg(alpha) + " missing");
    return std::size_t{0};
  };

  // No detections for nonnegative strengths.
  for (const pescat::SweepReport* r : {&rq1, &rq2})
    for (std::size_t ai = 0; ai < r->alphas.size(); ++ai)
      if (r->alphas[ai] >= 0.0)
        ck.require(r->brackets[ai].empty(),
                   "bracket at nonnegative alpha " + fmtg(r->alphas[ai]));

  // No detections below the proven smallness bound.
  double sb = pescat::smallness_bound(1.0);
  ck.require(0.2 < sb, "sub-threshold strength not below bound");
  pescat::SweepConfig small_cfg;
  small_cfg.alpha_min = -0.2;
  small_cfg.alpha_max = 0.2;
  small_cfg.alpha_count = 3;
  pescat::SweepReport rs = pescat::run_sweep(small_cfg);
  for (std::size_t ai = 0; ai < rs.alphas.size(); ++ai)
    ck.require(rs.brackets[ai].empty(),
               "bracket below the smallness bound at alpha " +
                   fmtg(rs.alphas[ai]));

  // The first circle appears between -5 and -10 at this resolution; every
  // stronger row shows one or two circles in the window.
  ck.require(count_at(rq1, -5.0) == 0, "unexpected circle at alpha=-5");
  for (double alpha : {-10.0, -15.0, -20.0, -25.0, -30.0, -35.0}) {
    std::size_t n = count_at(rq1, alpha);
    ck.require(n >= 1 && n <= 2,
               "alpha " + fmtg(alpha) + " has " + std::to_string(n) +
                   " brackets, expected 1 or 2");
  }
  ck.require(count_at(rq1, -15.0) >= 1, "no circle at alpha=-15");
  ck.require(count_at(rq1, -30.0) >= 1, "no circle at alpha=-30");

  // The second circle is present by alpha=-30 for the plateau potential and
  // is the main difference against the conductivity-type variant, whose
  // window shows a single circle there.
  ck.require(count_at(rq1, -30.0) == 2, "second circle missing at alpha=-30");
  ck.require(count_at(rq2, -30.0) == 1,
             "conductivity variant should differ in the second circle");
  for (double alpha : {-10.0, -15.0, -20.0, -25.0})
    ck.require(count_at(rq1, alpha) == count_at(rq2, alpha),
               "count mismatch between potentials at alpha " + fmtg(alpha));
  ck.require(count_at(rq2, -5.0) == 1,
             "conductivity variant should already show a circle at alpha=-5");

  int unconverged = 0;
  for (const auto& sample : rq1.samples) unconverged += sample.converged ? 0 : 1;
  for (const auto& sample : rq2.samples) unconverged += sample.converged ? 0 : 1;
  ck.note("desk sweeps " + fmtg(rq1.seconds) + " s + " + fmtg(rq2.seconds) +
          " s, unconverged " + std::to_string(unconverged) +
          ", symcheck rel " + fmtg(rq1.symcheck_rel));
  return ck;
}

// ---- 11: repeated, cached, and uncached runs are bit-identical -------------

Check c11_determinism() {
  Check ck;
  pescat::SweepConfig cfg;
  cfg.lambda_min = 1.4;
  cfg.lambda_max = 2.6;
  cfg.lambda_count = 5;
  cfg.alpha_min = -6.0;
  cfg.alpha_max = 6.0;
  cfg.alpha_count = 3;

  pescat::green_grid_cache_clear();
  pescat::SweepReport a = pescat::run_sweep(cfg);  // cold cache
  pescat::SweepReport b = pescat::run_sweep(cfg);  // warm cache
  pescat::SweepConfig nc = cfg;
  nc.use_grid_cache = false;
  pescat::green_grid_cache_clear();
  pescat::SweepReport c = pescat::run_sweep(nc);  // cache bypassed

  auto same = [](const pescat::SweepReport& x, const pescat::SweepReport& y) {
    if (x.samples.size() != y.samples.size()) return false;
    for (std::size_t i = 0; i < x.samples.size(); ++i) {
      const auto& u = x.samples[i];
      const auto& v = y.samples[i];
      if (bits(u.t.real()) != bits(v.t.real())) return false;
      if (bits(u.t.imag()) != bits(v.t.imag())) return false;
      if (u.converged != v.converged) return false;
      if (u.gmres_iterations != v.gmres_iterations) return false;
      if (bits(u.ls_res) != bits(v.ls_res)) return false;
    }
    if (x.brackets.size() != y.brackets.size()) return false;
    for (std::size_t ai = 0; ai < x.brackets.size(); ++ai) {
      if (x.brackets[ai].size() != y.brackets[ai].size()) return false;
      for (std::size_t k = 0; k < x.brackets[ai].size(); ++k) {
        if (bits(x.brackets[ai][k].lo) != bits(y.brackets[ai][k].lo)) return false;
        if (bits(x.brackets[ai][k].hi) != bits(y.brackets[ai][k].hi)) return false;
      }
    }
    return bits(x.symcheck_rel) == bits(y.symcheck_rel);
  };
  ck.require(same(a, b), "repeated run differs from the first run");
  ck.require(same(a, c), "uncached run differs from the cached run");
  ck.note("3 x 5 sub-sweep bit-identical across repeat and cache bypass");
  return ck;
}

struct Criterion {
  const char* name;
  double limit_seconds;  // 0 = no stated budget
  Check (*fn)();
};

const Criterion kCriteria[] = {
    {"contour cross-agreement", 60.0, c01_cross_agreement},
    {"truncation-limit robustness", 60.0, c02_truncation},
    {"governing-equation residual", 60.0, c03_pde_residual},
    {"conjugation symmetry", 0.0, c04_conjugation},
    {"single-layer patch", 0.0, c05_single_layer},
    {"magnitude envelope", 0.0, c06_magnitude},
    {"linear-limit sanity", 0.0, c07_linear_limit},
    {"transform symmetries", 600.0, c08_transform_symmetries},
    {"dbar residual", 1800.0, c09_dbar},
    {"exceptional-point structure", 7200.0, c10_exceptional_structure},
    {"determinism and cache transparency", 0.0, c11_determinism},
};

}  // namespace

int main() {
  const int total = static_cast<int>(std::size(kCriteria));
  std::printf("acceptance gate: %d criteria\n", total);
  std::fflush(stdout);
  int failures = 0;
  for (int i = 0; i < total; ++i) {
    const Criterion& cr = kCriteria[i];
    auto t0 = std::chrono::steady_clock::now();
    Check ck;
    try {
      ck = cr.fn();
    } catch (const std::exception& e) {
      ck.pass = false;
      ck.append(std::string("exception: ") + e.what());
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (cr.limit_seconds > 0.0 && secs > cr.limit_seconds) {
      ck.pass = false;
      ck.append("runtime " + fmtg(secs) + " s exceeds " +
                fmtg(cr.limit_seconds) + " s");
    }
    if (!ck.pass) ++failures;
    std::printf("[%s] %02d %s: %s (%.1f s)\n", ck.pass ? "PASS" : "FAIL", i + 1,
                cr.name, ck.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("acceptance: %d/%d passed\n", total - failures, total);
  return failures;
}
