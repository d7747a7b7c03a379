#pragma once

#include <vector>

namespace pescat {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule on [a, b]; exact for polynomials of degree
// <= 2n-1. Requires n >= 1 and a < b (throws std::invalid_argument).
QuadratureRule gauss_legendre(int n, double a, double b);

}  // namespace pescat
