// Command-line front end: point evaluations, CGO field exports, scattering
// transforms, d-bar residuals, and (alpha, lambda) sweeps with CSV/SVG output.
#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pescat/sweep.hpp"

namespace {

using pescat::Complex;

double parse_number(const std::string& text) {
  std::size_t idx = 0;
  double v = std::stod(text, &idx);
  if (idx != text.size()) {
    throw std::invalid_argument("trailing characters in number: " + text);
  }
  return v;
}

// "RE,IM" (or bare "RE" for a real value).
Complex parse_pair(const std::string& text) {
  std::size_t comma = text.find(',');
  if (comma == std::string::npos) return Complex(parse_number(text), 0.0);
  return Complex(parse_number(text.substr(0, comma)),
                 parse_number(text.substr(comma + 1)));
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Flat key=value config: each key mirrors a long flag. Keys already present
// on the command line are skipped, so explicit flags override the file.
void inject_config_args(std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      break;
    }
  }
  if (path.empty()) return;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::runtime_error("config " + path + ":" +
                               std::to_string(lineno) +
                               ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    std::string flag = "--" + key;
    bool present = false;
    for (const std::string& a : args) {
      if (a == flag || a.rfind(flag + "=", 0) == 0) {
        present = true;
        break;
      }
    }
    if (!present) args.push_back(flag + "=" + value);
  }
}

struct PotentialOpts {
  std::string kind = "q1";
  double alpha = 0.0;
  double R1 = 0.8;
  double R2 = 0.9;
  double sigma_amp = 2.0;
  double sigma_R1 = 0.4;
  double sigma_R2 = 0.7;

  pescat::PotentialSpec spec() const {
    pescat::PotentialSpec s;
    s.kind = kind == "q2" ? pescat::PotentialKind::Q2
                          : pescat::PotentialKind::Q1;
    s.alpha = alpha;
    s.bump.R1 = R1;
    s.bump.R2 = R2;
    s.sigma_amp = sigma_amp;
    s.sigma_R1 = sigma_R1;
    s.sigma_R2 = sigma_R2;
    return s;
  }
};

void add_potential_options(CLI::App* sub, PotentialOpts& opts,
                           bool with_alpha) {
  sub->add_option("--potential", opts.kind, "potential family (q1 or q2)")
      ->check(CLI::IsMember({"q1", "q2"}));
  if (with_alpha) {
    sub->add_option("--alpha", opts.alpha, "potential strength");
  }
  sub->add_option("--R1", opts.R1, "bump plateau radius");
  sub->add_option("--R2", opts.R2, "bump support radius");
  sub->add_option("--sigma-amp", opts.sigma_amp, "q2 conductivity amplitude");
  sub->add_option("--sigma-R1", opts.sigma_R1, "q2 conductivity inner radius");
  sub->add_option("--sigma-R2", opts.sigma_R2, "q2 conductivity outer radius");
}

struct SolverOpts {
  int M = 8;
  double s = 2.1;
  double cutoff = 2.05;
  double ls_tol = 1e-7;
  int workers = 0;
};

void add_solver_options(CLI::App* sub, SolverOpts& opts) {
  sub->add_option("--M", opts.M, "grid refinement (2^M nodes per side)");
  sub->add_option("--s", opts.s, "torus half-width");
  sub->add_option("--cutoff", opts.cutoff, "kernel truncation radius");
  sub->add_option("--ls-tol", opts.ls_tol, "GMRES relative tolerance");
  sub->add_option("--workers", opts.workers, "thread count (0 = hardware)");
}

void add_config_option(CLI::App* sub, std::string& path) {
  sub->add_option("--config", path,
                  "flat key=value file mirroring the flags; "
                  "explicit flags override it");
}

pescat::CgoField solve_field(const Complex& lambda, double energy,
                             const SolverOpts& solver,
                             const pescat::PotentialSpec& spec,
                             std::vector<double>* q_out) {
  pescat::SpectralParam p{lambda, energy};
  pescat::GreenGrid g =
      pescat::green_grid(p, solver.M, solver.s, solver.workers);
  pescat::PeriodizedKernel kernel = pescat::periodize_green(g, solver.cutoff);
  std::vector<double> q = pescat::potential_grid(kernel.grid, spec);
  pescat::CgoField field = pescat::ls_solve(kernel, q, solver.ls_tol);
  if (q_out) *q_out = std::move(q);
  return field;
}

std::string bracket_summary(const std::vector<pescat::LambdaBracket>& row) {
  if (row.empty()) return "none";
  std::ostringstream out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "[%.6g, %.6g]", row[i].lo, row[i].hi);
    out << (i ? " " : "") << buf;
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Faddeev Green's function, CGO fields, scattering transforms, and "
      "exceptional-point sweeps"};
  app.require_subcommand(1);

  // green ------------------------------------------------------------------
  auto* green = app.add_subcommand(
      "green", "evaluate g_lambda(z) at one point");
  std::string green_lambda, green_z, green_config;
  double green_energy = 1.0;
  green->add_option("--lambda", green_lambda, "spectral parameter RE,IM")
      ->required();
  green->add_option("--z", green_z, "evaluation point X1,X2")->required();
  green->add_option("--energy", green_energy, "energy E > 0");
  add_config_option(green, green_config);
  green->callback([&]() {
    pescat::SpectralParam p{parse_pair(green_lambda), green_energy};
    Complex g = pescat::green_eval(parse_pair(green_z), p);
    std::printf("g = (%.12g, %.12g)\n", g.real(), g.imag());
  });

  // mu ---------------------------------------------------------------------
  auto* mu = app.add_subcommand("mu", "solve the CGO field on the torus grid");
  std::string mu_lambda, mu_out, mu_config;
  double mu_energy = 1.0;
  PotentialOpts mu_pot;
  SolverOpts mu_solver;
  mu->add_option("--lambda", mu_lambda, "spectral parameter RE,IM")
      ->required();
  mu->add_option("--energy", mu_energy, "energy E > 0");
  mu->add_option("--out", mu_out, "output CSV path (x1,x2,re_mu,im_mu)")
      ->required();
  add_potential_options(mu, mu_pot, true);
  add_solver_options(mu, mu_solver);
  add_config_option(mu, mu_config);
  mu->callback([&]() {
    pescat::CgoField field = solve_field(parse_pair(mu_lambda), mu_energy,
                                         mu_solver, mu_pot.spec(), nullptr);
    std::ofstream out(mu_out);
    if (!out) throw std::runtime_error("cannot open for writing: " + mu_out);
    out << "x1,x2,re_mu,im_mu\n";
    int n = field.grid.n();
    char buf[160];
    for (int i1 = 0; i1 < n; ++i1) {
      for (int i2 = 0; i2 < n; ++i2) {
        const Complex& v = field.mu[static_cast<std::size_t>(i1) *
                                       static_cast<std::size_t>(n) +
                                   static_cast<std::size_t>(i2)];
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n",
                      field.grid.coord(i1), field.grid.coord(i2), v.real(),
                      v.imag());
        out << buf;
      }
    }
    out.close();
    if (out.fail()) throw std::runtime_error("write failed: " + mu_out);
    std::printf("converged = %d\n", field.report.converged ? 1 : 0);
    std::printf("gmres_iterations = %d\n", field.report.iterations);
    std::printf("wrote %s (%d x %d)\n", mu_out.c_str(), n, n);
  });

  // tk ---------------------------------------------------------------------
  auto* tk = app.add_subcommand("tk", "scattering transform t(lambda)");
  std::string tk_lambda, tk_config;
  double tk_energy = 1.0;
  PotentialOpts tk_pot;
  SolverOpts tk_solver;
  tk->add_option("--lambda", tk_lambda, "spectral parameter RE,IM")
      ->required();
  tk->add_option("--energy", tk_energy, "energy E > 0");
  add_potential_options(tk, tk_pot, true);
  add_solver_options(tk, tk_solver);
  add_config_option(tk, tk_config);
  tk->callback([&]() {
    Complex lambda = parse_pair(tk_lambda);
    std::vector<double> q;
    pescat::CgoField field =
        solve_field(lambda, tk_energy, tk_solver, tk_pot.spec(), &q);
    pescat::SpectralParam p{lambda, tk_energy};
    Complex t = pescat::scattering_transform(field, q, p);
    std::printf("t = (%.12g, %.12g)\n", t.real(), t.imag());
    std::printf("converged = %d\n", field.report.converged ? 1 : 0);
    std::printf("gmres_iterations = %d\n", field.report.iterations);
    std::printf("gmres_residual = %.12g\n", field.report.final_residual);
  });

  // dbar -------------------------------------------------------------------
  auto* dbar = app.add_subcommand(
      "dbar", "d-bar equation residual at one spectral parameter");
  std::string dbar_lambda, dbar_config;
  double dbar_energy = 1.0, dbar_dlambda = 1e-4;
  PotentialOpts dbar_pot;
  SolverOpts dbar_solver;
  dbar_solver.ls_tol = 1e-9;
  dbar->add_option("--lambda", dbar_lambda, "spectral parameter RE,IM")
      ->required();
  dbar->add_option("--dlambda", dbar_dlambda, "stencil spacing");
  dbar->add_option("--energy", dbar_energy, "energy E > 0");
  add_potential_options(dbar, dbar_pot, true);
  add_solver_options(dbar, dbar_solver);
  add_config_option(dbar, dbar_config);
  dbar->callback([&]() {
    pescat::SpectralParam p{parse_pair(dbar_lambda), dbar_energy};
    pescat::DbarDiagnostics diag;
    double residual = pescat::dbar_residual(
        p, dbar_dlambda, dbar_pot.spec(), dbar_solver.M, dbar_solver.s,
        dbar_solver.cutoff, dbar_solver.workers, dbar_solver.ls_tol, &diag);
    std::printf("residual = %.12g\n", residual);
    std::printf("t = (%.12g, %.12g)\n", diag.t.real(), diag.t.imag());
  });

  // sweep ------------------------------------------------------------------
  auto* sweep = app.add_subcommand(
      "sweep", "(alpha, lambda) sweep with CSV and SVG output");
  pescat::SweepConfig sweep_cfg;
  PotentialOpts sweep_pot;
  std::string sweep_out_dir = ".", sweep_config;
  double alpha_step = 0.0;
  sweep_cfg.M = 7;
  sweep->add_option("--lambda-min", sweep_cfg.lambda_min, "grid start");
  sweep->add_option("--lambda-max", sweep_cfg.lambda_max, "grid end");
  sweep->add_option("--lambda-count", sweep_cfg.lambda_count, "grid points");
  sweep->add_option("--alpha-min", sweep_cfg.alpha_min, "strength start");
  sweep->add_option("--alpha-max", sweep_cfg.alpha_max, "strength end");
  auto* count_opt =
      sweep->add_option("--alpha-count", sweep_cfg.alpha_count,
                        "strength points");
  auto* step_opt = sweep->add_option(
      "--alpha-step", alpha_step, "strength spacing (alternative to count)");
  count_opt->excludes(step_opt);
  sweep->add_option("--M", sweep_cfg.M,
                    "grid refinement (2^M nodes per side)");
  sweep->add_option("--energy", sweep_cfg.energy, "energy E > 0");
  sweep->add_option("--s", sweep_cfg.s, "torus half-width");
  sweep->add_option("--cutoff", sweep_cfg.cutoff, "kernel truncation radius");
  sweep->add_option("--ls-tol", sweep_cfg.ls_tol, "GMRES relative tolerance");
  sweep->add_option("--workers", sweep_cfg.workers,
                    "thread count (0 = hardware)");
  sweep->add_flag("--no-grid-cache",
                  [&](std::int64_t) { sweep_cfg.use_grid_cache = false; },
                  "rebuild Green grids instead of caching them");
  sweep->add_option("--out-dir", sweep_out_dir, "output directory");
  add_potential_options(sweep, sweep_pot, false);
  add_config_option(sweep, sweep_config);
  sweep->callback([&]() {
    if (step_opt->count() > 0) {
      if (!(alpha_step > 0.0)) {
        throw std::invalid_argument("--alpha-step must be positive");
      }
      double span = sweep_cfg.alpha_max - sweep_cfg.alpha_min;
      double steps = span / alpha_step;
      long rounded = std::lround(steps);
      if (std::abs(steps - static_cast<double>(rounded)) > 1e-9) {
        throw std::invalid_argument(
            "--alpha-step does not evenly divide the alpha range");
      }
      sweep_cfg.alpha_count = static_cast<int>(rounded) + 1;
    }
    sweep_cfg.potential = sweep_pot.spec();
    pescat::SweepReport report = pescat::run_sweep(sweep_cfg);

    std::filesystem::path dir(sweep_out_dir);
    std::filesystem::create_directories(dir);
    std::string csv_path = (dir / "samples.csv").string();
    pescat::emit_csv(report, csv_path);
    std::string heat_path = (dir / "heatmap.svg").string();
    pescat::emit_heatmap_svg(report, heat_path);

    std::size_t unconverged = 0;
    for (const auto& s : report.samples) {
      if (!s.converged) ++unconverged;
    }
    std::printf("sweep: %zu lambda x %zu alpha, M=%d, %.2f s\n",
                report.lambdas.size(), report.alphas.size(), report.cfg.M,
                report.seconds);
    std::printf("unconverged samples: %zu of %zu\n", unconverged,
                report.samples.size());
    for (std::size_t ai = 0; ai < report.alphas.size(); ++ai) {
      char name[64];
      std::snprintf(name, sizeof(name), "profile_a%g.svg",
                    report.alphas[ai]);
      std::string profile_path = (dir / name).string();
      pescat::emit_profile_svg(report, report.alphas[ai], profile_path);
      std::printf("alpha = %g: brackets %s\n", report.alphas[ai],
                  bracket_summary(report.brackets[ai]).c_str());
    }
    std::printf("symmetry check at lambda = %g: rel = %.6g\n",
                report.symcheck_lambda, report.symcheck_rel);
    std::printf("wrote %s\n", csv_path.c_str());
    std::printf("wrote %s\n", heat_path.c_str());
  });

  // bound ------------------------------------------------------------------
  auto* bound = app.add_subcommand(
      "bound", "smallness bound excluding exceptional points");
  double bound_eps = 0.0;
  std::string bound_config;
  bound->add_option("--epsilon", bound_eps, "annulus margin (> 0)")
      ->required();
  add_config_option(bound, bound_config);
  bound->callback([&]() {
    std::printf("chat = %.12g\n", pescat::chat());
    std::printf("smallness bound (epsilon = %g) = %.12g\n", bound_eps,
                pescat::smallness_bound(bound_eps));
  });

  // calibrate --------------------------------------------------------------
  auto* calibrate = app.add_subcommand(
      "calibrate", "report calibrated panel counts per contour variant");
  std::string cal_lambda, cal_config;
  double cal_energy = 1.0;
  calibrate->add_option("--lambda", cal_lambda, "spectral parameter RE,IM")
      ->required();
  calibrate->add_option("--energy", cal_energy, "energy E > 0");
  add_config_option(calibrate, cal_config);
  calibrate->callback([&]() {
    pescat::SpectralParam p{parse_pair(cal_lambda), cal_energy};
    auto evaluator = pescat::green_evaluator(p);
    const pescat::ReducedZeta& red = evaluator->reduced();
    std::printf("reduced frame: k1 = %.12g, k2 = %.12g, theta = %.12g\n",
                red.k1, red.k2, red.theta);
    std::printf("T1 panels = %d\n",
                evaluator->panels(pescat::ContourVariant::T1));
    std::printf("T2 panels = %d\n",
                evaluator->panels(pescat::ContourVariant::T2));
    std::printf("T3 panels = %d\n",
                evaluator->panels(pescat::ContourVariant::T3));
  });

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    inject_config_args(args);
    std::vector<const char*> ptrs;
    ptrs.reserve(args.size() + 1);
    ptrs.push_back(argv[0]);
    for (const std::string& a : args) ptrs.push_back(a.c_str());
    app.parse(static_cast<int>(ptrs.size()),
              const_cast<char**>(ptrs.data()));
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
