#pragma once

#include "pescat/spectral.hpp"

namespace pescat {

// C^2 radial plateau: 1 on [0, R1], quintic smoothstep down to 0 at R2.
struct RadialBump {
  double R1 = 0.8;
  double R2 = 0.9;
};

enum class PotentialKind { Q1, Q2 };

// Q1: alpha * phi(|z|).
// Q2: Delta(sqrt(sigma))/sqrt(sigma) + alpha * phi(|z|), with the radial
// conductivity sigma = 1 + sigma_amp * phi_sigma(|z|) built from the same
// quintic profile on (sigma_R1, sigma_R2); defaults give a C^2 bump with
// peak 3 at the center, supported in the unit disk.
struct PotentialSpec {
  PotentialKind kind = PotentialKind::Q1;
  double alpha = 0.0;
  RadialBump bump;
  double sigma_amp = 2.0;
  double sigma_R1 = 0.4;
  double sigma_R2 = 0.7;
};

double bump_phi(double r, const RadialBump& bump);

// Real, radial, supported in the closed unit disk. The Q2 conductivity term
// uses exact piecewise-polynomial derivatives of sigma:
// Delta f = f'' + f'/r with f = sqrt(sigma) (limit 2 f''(0) at r = 0).
double eval_potential(Complex z, const PotentialSpec& spec);

// chat = (1/4) sup_r |sqrt(r) Y0(r)|
//      + (1/4 pi) sup_{r, phi0} |sqrt(r) \int_{phi0}^{phi0+pi} e^{i r sin phi} dphi|,
// both maxima found numerically (grid scan + golden-section refinement).
// Computed once per process and cached.
double chat();

// 1 / (chat (4 pi/3 + D_eps)) with D_eps = 2 pi / ((1 + eps) eps).
// Potentials with L^inf norm below this bound admit no exceptional points.
// Requires eps > 0 (throws std::invalid_argument).
double smallness_bound(double epsilon);

}  // namespace pescat
