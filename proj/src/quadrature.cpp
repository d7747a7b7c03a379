#include "pescat/numerics/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace pescat {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre_pd(int n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= n; ++k) {
    double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

struct CanonicalRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Nodes on [-1, 1] by guarded Newton from the Chebyshev estimates; weights
// w = 2 / ((1 - x^2) P_n'(x)^2). Cached per n.
const CanonicalRule& canonical_rule(int n) {
  static std::mutex mutex;
  static std::map<int, CanonicalRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  CanonicalRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  if (n == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = 2.0;
  } else {
    for (int i = 1; i <= n; ++i) {
      double x = std::cos(M_PI * (i - 0.25) / (n + 0.5));
      for (int iter = 0; iter < 100; ++iter) {
        auto [p, dp] = legendre_pd(n, x);
        double dx = p / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      auto [p, dp] = legendre_pd(n, x);
      (void)p;
      rule.nodes[n - i] = x;  // Chebyshev guesses run from +1 down to -1
      rule.weights[n - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }
  auto [pos, inserted] = cache.emplace(n, std::move(rule));
  (void)inserted;
  return pos->second;
}

}  // namespace

QuadratureRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  if (!(a < b)) throw std::invalid_argument("gauss_legendre: need a < b");
  const CanonicalRule& canon = canonical_rule(n);
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  double mid = 0.5 * (a + b);
  double half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = mid + half * canon.nodes[i];
    rule.weights[i] = half * canon.weights[i];
  }
  return rule;
}

}  // namespace pescat
