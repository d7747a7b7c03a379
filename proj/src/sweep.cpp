#include "pescat/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "pescat/parallel.hpp"

namespace pescat {

namespace {

constexpr double kUnitBand = 0.005;

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> out(static_cast<std::size_t>(count));
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  double step = (hi - lo) / static_cast<double>(count - 1);
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = lo + step * i;
  out.back() = hi;  // close the range exactly despite rounding
  return out;
}

// Restores the grid-cache flag even if a solve throws mid-sweep.
struct CacheFlagGuard {
  bool previous;
  explicit CacheFlagGuard(bool enabled)
      : previous(green_grid_cache_enable(enabled)) {}
  ~CacheFlagGuard() { green_grid_cache_enable(previous); }
  CacheFlagGuard(const CacheFlagGuard&) = delete;
  CacheFlagGuard& operator=(const CacheFlagGuard&) = delete;
};

int resolve_workers(int workers) {
  if (workers > 0) return workers;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Shortest decimal string that round-trips to the same double.
std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double percentile(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) return 0.0;
  if (sorted.size() == 1) return sorted.front();
  double pos = p * static_cast<double>(sorted.size() - 1);
  std::size_t lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= sorted.size()) return sorted.back();
  double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

void write_file_or_throw(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << body;
  out.close();
  if (out.fail()) throw std::runtime_error("write failed: " + path);
}

}  // namespace

SweepReport run_sweep(const SweepConfig& cfg) {
  if (cfg.lambda_count < 1 || cfg.alpha_count < 1) {
    throw std::invalid_argument("run_sweep: counts must be >= 1");
  }
  if (cfg.lambda_count > 1 && !(cfg.lambda_max > cfg.lambda_min)) {
    throw std::invalid_argument("run_sweep: lambda_max must exceed lambda_min");
  }
  if (cfg.alpha_count > 1 && !(cfg.alpha_max > cfg.alpha_min)) {
    throw std::invalid_argument("run_sweep: alpha_max must exceed alpha_min");
  }

  auto t0 = std::chrono::steady_clock::now();

  SweepReport report;
  report.cfg = cfg;
  report.alphas = linspace(cfg.alpha_min, cfg.alpha_max, cfg.alpha_count);
  report.lambdas = linspace(cfg.lambda_min, cfg.lambda_max, cfg.lambda_count);
  for (double lam : report.lambdas) {
    if (lam == 0.0 || std::abs(std::abs(lam) - 1.0) < kUnitBand) {
      throw std::invalid_argument(
          "run_sweep: lambda grid enters the unit-circle exclusion band");
    }
  }

  const std::size_t n_alpha = report.alphas.size();
  const std::size_t n_lambda = report.lambdas.size();
  report.samples.resize(n_alpha * n_lambda);

  TorusGrid grid{cfg.M, cfg.s};
  std::vector<std::vector<double>> qgrids(n_alpha);
  for (std::size_t ai = 0; ai < n_alpha; ++ai) {
    PotentialSpec spec = cfg.potential;
    spec.alpha = report.alphas[ai];
    qgrids[ai] = potential_grid(grid, spec);
  }

  CacheFlagGuard cache_guard(cfg.use_grid_cache);
  int workers = resolve_workers(cfg.workers);
  // Parallelism is across lambda tasks; each task builds its Green grid
  // single-threaded unless there is only one task to run. Samples land in
  // disjoint slots, so the result is independent of the worker count.
  int grid_workers = n_lambda == 1 ? workers : 1;

  parallel_for(n_lambda, workers, [&](std::size_t li) {
    SpectralParam p{Complex(report.lambdas[li], 0.0), cfg.energy};
    GreenGrid g = green_grid(p, cfg.M, cfg.s, grid_workers);
    PeriodizedKernel kernel = periodize_green(g, cfg.cutoff);
    for (std::size_t ai = 0; ai < n_alpha; ++ai) {
      CgoField field = ls_solve(kernel, qgrids[ai], cfg.ls_tol);
      ScatteringSample& sample = report.samples[ai * n_lambda + li];
      sample.lambda = p.lambda;
      sample.alpha = report.alphas[ai];
      sample.t = scattering_transform(field, qgrids[ai], p);
      sample.converged = field.report.converged;
      sample.gmres_iterations = field.report.iterations;
      sample.ls_res = ls_residual(field, kernel, qgrids[ai]);
    }
  });

  report.brackets.resize(n_alpha);
  for (std::size_t ai = 0; ai < n_alpha; ++ai) {
    std::vector<ScatteringSample> profile(
        report.samples.begin() + static_cast<std::ptrdiff_t>(ai * n_lambda),
        report.samples.begin() +
            static_cast<std::ptrdiff_t>((ai + 1) * n_lambda));
    report.brackets[ai] = detect_exceptional(profile);
  }

  // Reciprocal-symmetry spot check t(1/r) == t(r): pick the grid lambda
  // closest to 2 (well clear of the unit band on both sides of the
  // inversion) and the alpha of largest magnitude.
  {
    std::size_t li_sym = 0;
    for (std::size_t li = 1; li < n_lambda; ++li) {
      if (std::abs(report.lambdas[li] - 2.0) <
          std::abs(report.lambdas[li_sym] - 2.0)) {
        li_sym = li;
      }
    }
    std::size_t ai_sym = 0;
    for (std::size_t ai = 1; ai < n_alpha; ++ai) {
      if (std::abs(report.alphas[ai]) > std::abs(report.alphas[ai_sym])) {
        ai_sym = ai;
      }
    }
    double r = report.lambdas[li_sym];
    report.symcheck_lambda = r;
    try {
      SpectralParam p_inv{Complex(1.0 / r, 0.0), cfg.energy};
      GreenGrid g_inv = green_grid(p_inv, cfg.M, cfg.s, workers);
      PeriodizedKernel kernel_inv = periodize_green(g_inv, cfg.cutoff);
      CgoField field_inv = ls_solve(kernel_inv, qgrids[ai_sym], cfg.ls_tol);
      Complex t_inv = scattering_transform(field_inv, qgrids[ai_sym], p_inv);
      const Complex t_fwd =
          report.samples[ai_sym * n_lambda + li_sym].t;
      report.symcheck_rel =
          std::abs(t_inv - t_fwd) / std::max(1.0, std::abs(t_fwd));
    } catch (const std::exception&) {
      report.symcheck_rel = std::numeric_limits<double>::quiet_NaN();
    }
  }

  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

std::vector<LambdaBracket> detect_exceptional(
    const std::vector<ScatteringSample>& profile) {
  const std::size_t n = profile.size();
  for (std::size_t i = 1; i < n; ++i) {
    if (profile[i].lambda.real() < profile[i - 1].lambda.real()) {
      throw std::invalid_argument(
          "detect_exceptional: profile must be sorted by Re lambda");
    }
  }
  if (n < 2) return {};

  std::vector<double> magnitudes;
  magnitudes.reserve(n);
  for (const ScatteringSample& s : profile) {
    if (s.converged) magnitudes.push_back(std::abs(s.t));
  }
  double median = 0.0;
  if (!magnitudes.empty()) {
    std::sort(magnitudes.begin(), magnitudes.end());
    std::size_t m = magnitudes.size();
    median = (magnitudes[(m - 1) / 2] + magnitudes[m / 2]) / 2.0;
  }

  // Triggers as index intervals [lo, hi].
  std::vector<std::pair<std::size_t, std::size_t>> triggers;

  // (a) Sign change of Re t between consecutive converged samples (an
  // unconverged sample in between does not break adjacency — the pole it
  // sits on is exactly what the flip detects) while |t| clears 10x the
  // profile median at either endpoint. The strict product keeps bounded
  // profiles and all-zero rows trigger-free.
  std::size_t prev_converged = n;  // sentinel: none seen yet
  for (std::size_t i = 0; i < n; ++i) {
    if (!profile[i].converged) continue;
    if (prev_converged != n) {
      double a = profile[prev_converged].t.real();
      double b = profile[i].t.real();
      double mag_a = std::abs(profile[prev_converged].t);
      double mag_b = std::abs(profile[i].t);
      if (a * b < 0.0 && (mag_a > 10.0 * median || mag_b > 10.0 * median)) {
        triggers.emplace_back(prev_converged, i);
      }
    }
    prev_converged = i;
  }

  // (b) Runs of >= 2 consecutive unconverged samples, extended one sample
  // each side so the run lies inside its bracket.
  std::size_t run_start = n;
  for (std::size_t i = 0; i <= n; ++i) {
    bool bad = i < n && !profile[i].converged;
    if (bad && run_start == n) run_start = i;
    if (!bad && run_start != n) {
      std::size_t run_end = i - 1;
      if (run_end > run_start) {
        triggers.emplace_back(run_start == 0 ? 0 : run_start - 1,
                              std::min(run_end + 1, n - 1));
      }
      run_start = n;
    }
  }

  if (triggers.empty()) return {};
  std::sort(triggers.begin(), triggers.end());

  // Merge triggers within one grid step of each other (index adjacency on
  // the uniform profile grid).
  std::vector<std::pair<std::size_t, std::size_t>> merged;
  for (const auto& t : triggers) {
    if (!merged.empty() && t.first <= merged.back().second + 1) {
      merged.back().second = std::max(merged.back().second, t.second);
    } else {
      merged.push_back(t);
    }
  }

  std::vector<LambdaBracket> brackets;
  brackets.reserve(merged.size());
  for (const auto& t : merged) {
    brackets.push_back(LambdaBracket{profile[t.first].lambda.real(),
                                     profile[t.second].lambda.real()});
  }
  return brackets;
}

void emit_csv(const SweepReport& report, const std::string& path) {
  std::ostringstream out;
  out << "alpha,lambda_re,lambda_im,t_re,t_im,converged,gmres_iterations,"
         "ls_residual\n";
  for (const ScatteringSample& s : report.samples) {
    out << format_double(s.alpha) << ',' << format_double(s.lambda.real())
        << ',' << format_double(s.lambda.imag()) << ','
        << format_double(s.t.real()) << ',' << format_double(s.t.imag())
        << ',' << (s.converged ? 1 : 0) << ',' << s.gmres_iterations << ','
        << format_double(s.ls_res) << '\n';
  }
  write_file_or_throw(path, out.str());
}

void emit_profile_svg(const SweepReport& report, double alpha,
                      const std::string& path) {
  if (report.alphas.empty() || report.lambdas.empty()) {
    throw std::invalid_argument("emit_profile_svg: empty report");
  }
  std::size_t ai = 0;
  for (std::size_t i = 1; i < report.alphas.size(); ++i) {
    if (std::abs(report.alphas[i] - alpha) <
        std::abs(report.alphas[ai] - alpha)) {
      ai = i;
    }
  }
  const std::size_t n = report.lambdas.size();
  const ScatteringSample* row = &report.samples[ai * n];

  // Symmetric y-limit from the 98th percentile of |Re t| over converged
  // samples, so a pole does not flatten the rest of the profile.
  std::vector<double> mags;
  mags.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (row[i].converged) mags.push_back(std::abs(row[i].t.real()));
  }
  std::sort(mags.begin(), mags.end());
  double limit = percentile(mags, 0.98) * 1.2;
  if (!(limit > 0.0)) limit = 1.0;

  const double width = 640.0, height = 400.0;
  const double mx = 60.0, my = 30.0;
  const double pw = width - mx - 20.0, ph = height - my - 50.0;
  double lam_lo = report.lambdas.front(), lam_hi = report.lambdas.back();
  auto x_of = [&](double lam) {
    if (lam_hi == lam_lo) return mx + pw / 2.0;
    return mx + pw * (lam - lam_lo) / (lam_hi - lam_lo);
  };
  auto y_of = [&](double v) {
    double c = std::clamp(v, -limit, limit);
    return my + ph * (1.0 - (c + limit) / (2.0 * limit));
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Detected brackets as shaded bands.
  for (const LambdaBracket& b : report.brackets[ai]) {
    double x0 = x_of(b.lo), x1 = x_of(b.hi);
    out << "<rect x=\"" << x0 << "\" y=\"" << my << "\" width=\""
        << std::max(x1 - x0, 2.0) << "\" height=\"" << ph
        << "\" fill=\"#ff7f0e\" fill-opacity=\"0.25\"/>\n";
  }

  // Axes and zero line.
  out << "<line x1=\"" << mx << "\" y1=\"" << my + ph << "\" x2=\""
      << mx + pw << "\" y2=\"" << my + ph
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << mx << "\" y1=\"" << my << "\" x2=\"" << mx
      << "\" y2=\"" << my + ph
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << mx << "\" y1=\"" << y_of(0.0) << "\" x2=\""
      << mx + pw << "\" y2=\"" << y_of(0.0)
      << "\" stroke=\"#bbbbbb\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>"
         "\n";

  // Re t polyline, broken at unconverged samples.
  std::ostringstream segment;
  int seg_points = 0;
  auto flush_segment = [&]() {
    if (seg_points >= 2) {
      out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\""
             " points=\""
          << segment.str() << "\"/>\n";
    }
    segment.str("");
    seg_points = 0;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!row[i].converged) {
      flush_segment();
      out << "<circle cx=\"" << x_of(report.lambdas[i]) << "\" cy=\""
          << y_of(row[i].t.real())
          << "\" r=\"3\" fill=\"#d62728\"/>\n";
      continue;
    }
    segment << x_of(report.lambdas[i]) << ',' << y_of(row[i].t.real()) << ' ';
    ++seg_points;
  }
  flush_segment();

  // Annotations.
  out << "<text x=\"" << mx << "\" y=\"18\" font-size=\"13\" "
         "font-family=\"sans-serif\">Re t(lambda), alpha = "
      << format_double(report.alphas[ai]) << "</text>\n";
  out << "<text x=\"" << mx << "\" y=\"" << height - 18.0
      << "\" font-size=\"12\" font-family=\"sans-serif\">lambda = "
      << format_double(lam_lo) << "</text>\n";
  out << "<text x=\"" << mx + pw - 90.0 << "\" y=\"" << height - 18.0
      << "\" font-size=\"12\" font-family=\"sans-serif\">lambda = "
      << format_double(lam_hi) << "</text>\n";
  out << "<text x=\"6\" y=\"" << my + 12.0
      << "\" font-size=\"11\" font-family=\"sans-serif\">"
      << format_double(limit) << "</text>\n";
  out << "<text x=\"6\" y=\"" << my + ph
      << "\" font-size=\"11\" font-family=\"sans-serif\">"
      << format_double(-limit) << "</text>\n";
  out << "</svg>\n";
  write_file_or_throw(path, out.str());
}

void emit_heatmap_svg(const SweepReport& report, const std::string& path) {
  if (report.alphas.empty() || report.lambdas.empty()) {
    throw std::invalid_argument("emit_heatmap_svg: empty report");
  }
  const std::size_t n_alpha = report.alphas.size();
  const std::size_t n_lambda = report.lambdas.size();

  std::vector<double> values;
  values.reserve(report.samples.size());
  for (const ScatteringSample& s : report.samples) {
    if (s.converged) values.push_back(s.t.real());
  }
  std::sort(values.begin(), values.end());
  double p_lo = percentile(values, 0.02);
  double p_hi = percentile(values, 0.98);
  // Symmetric diverging scale: clip at the outer percentile magnitude so
  // zero maps to mid-gray, large negative to black, large positive to white.
  double limit = std::max(std::abs(p_lo), std::abs(p_hi));
  if (!(limit > 0.0)) limit = 1.0;

  const double mx = 70.0, my = 30.0;
  double cw = std::max(2.0, std::floor(760.0 / static_cast<double>(n_lambda)));
  double ch = std::max(2.0, std::floor(560.0 / static_cast<double>(n_alpha)));
  double pw = cw * static_cast<double>(n_lambda);
  double ph = ch * static_cast<double>(n_alpha);
  double width = mx + pw + 20.0, height = my + ph + 50.0;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t ai = 0; ai < n_alpha; ++ai) {
    // alpha increases upward: row ai drawn at (n_alpha - 1 - ai).
    double y = my + ch * static_cast<double>(n_alpha - 1 - ai);
    for (std::size_t li = 0; li < n_lambda; ++li) {
      const ScatteringSample& s = report.samples[ai * n_lambda + li];
      double x = mx + cw * static_cast<double>(li);
      std::string fill;
      if (!s.converged) {
        fill = "rgb(214,39,40)";
      } else {
        double v = std::clamp(s.t.real(), -limit, limit);
        int c = static_cast<int>(std::lround(255.0 * (v + limit) /
                                             (2.0 * limit)));
        std::ostringstream color;
        color << "rgb(" << c << ',' << c << ',' << c << ')';
        fill = color.str();
      }
      out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cw
          << "\" height=\"" << ch << "\" fill=\"" << fill << "\"/>\n";
    }
  }

  out << "<text x=\"" << mx << "\" y=\"18\" font-size=\"13\" "
         "font-family=\"sans-serif\">Re t over (alpha, lambda)</text>\n";
  out << "<text x=\"" << mx << "\" y=\"" << my + ph + 18.0
      << "\" font-size=\"12\" font-family=\"sans-serif\">lambda = "
      << format_double(report.lambdas.front()) << "</text>\n";
  out << "<text x=\"" << mx + pw - 90.0 << "\" y=\"" << my + ph + 18.0
      << "\" font-size=\"12\" font-family=\"sans-serif\">lambda = "
      << format_double(report.lambdas.back()) << "</text>\n";
  out << "<text x=\"4\" y=\"" << my + 12.0
      << "\" font-size=\"12\" font-family=\"sans-serif\">alpha = "
      << format_double(report.alphas.back()) << "</text>\n";
  out << "<text x=\"4\" y=\"" << my + ph
      << "\" font-size=\"12\" font-family=\"sans-serif\">alpha = "
      << format_double(report.alphas.front()) << "</text>\n";
  out << "</svg>\n";
  write_file_or_throw(path, out.str());
}

}  // namespace pescat
