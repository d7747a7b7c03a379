#pragma once

#include <string>
#include <vector>

#include "pescat/scatter.hpp"

namespace pescat {

struct SweepConfig {
  double lambda_min = 1.01;
  double lambda_max = 4.5;
  int lambda_count = 88;
  double alpha_min = -35.0;
  double alpha_max = 35.0;
  int alpha_count = 15;
  int M = 7;
  double energy = 1.0;
  double s = 2.1;
  double cutoff = 2.05;
  PotentialSpec potential;  // alpha field is overridden per sample
  double ls_tol = 1e-7;
  int workers = 0;  // 0 = hardware concurrency
  bool use_grid_cache = true;
};

struct LambdaBracket {
  double lo = 0.0;
  double hi = 0.0;
};

struct SweepReport {
  SweepConfig cfg;
  std::vector<double> alphas;
  std::vector<double> lambdas;
  // alpha-major: samples[ai * lambdas.size() + li]
  std::vector<ScatteringSample> samples;
  std::vector<std::vector<LambdaBracket>> brackets;  // per alpha
  // In-run reciprocal-symmetry spot check: |t(1/r) - t(r)| / max(1, |t(r)|)
  // at one deterministically chosen real lambda.
  double symcheck_lambda = 0.0;
  double symcheck_rel = 0.0;
  double seconds = 0.0;
};

// One Green grid per lambda, reused across all alpha; per-sample
// nonconvergence is recorded, never fatal. Deterministic for a fixed config
// (independent of worker count and cache state).
SweepReport run_sweep(const SweepConfig& cfg);

// Brackets where (a) Re t changes sign between adjacent converged samples
// while |t| exceeds 10x the profile median at either endpoint, or (b) runs
// of >= 2 unconverged samples occur; adjacent triggers merged when within
// one grid step. Profile must be sorted by Re lambda.
std::vector<LambdaBracket> detect_exceptional(
    const std::vector<ScatteringSample>& profile);

// CSV schema: alpha,lambda_re,lambda_im,t_re,t_im,converged,
// gmres_iterations,ls_residual; floats as shortest round-trip decimals.
// I/O errors throw std::runtime_error with the path in the message.
void emit_csv(const SweepReport& report, const std::string& path);

// t vs lambda for one alpha with detected brackets marked.
void emit_profile_svg(const SweepReport& report, double alpha,
                      const std::string& path);

// (alpha, lambda) matrix under a symmetric diverging gray scale clipped at
// the 2nd/98th percentiles (black = large negative, white = large positive);
// unconverged cells drawn red.
void emit_heatmap_svg(const SweepReport& report, const std::string& path);

}  // namespace pescat
