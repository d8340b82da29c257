#include "beamsym/quadrature.hpp"

#include <algorithm>

namespace beamsym {

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw ValidationError("quadrature order must be positive");
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double step = p1 / dp;
      z -= step;
      if (std::abs(step) < 1e-16) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = z;
    rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  std::reverse(rule.nodes.begin(), rule.nodes.end());
  std::reverse(rule.weights.begin(), rule.weights.end());
  return rule;
}

std::vector<double> chebyshev_nodes(int n, double a, double b) {
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    x[static_cast<std::size_t>(k)] =
        0.5 * (a + b) - 0.5 * (b - a) * std::cos(std::numbers::pi * (2.0 * k + 1.0) / (2.0 * n));
  return x;
}

std::vector<double> chebyshev_lobatto_nodes(int n, double a, double b) {
  if (n < 2) throw ValidationError("Chebyshev-Lobatto grid needs at least two nodes");
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    x[static_cast<std::size_t>(k)] = 0.5 * (a + b) - 0.5 * (b - a) * std::cos(std::numbers::pi * k / (n - 1.0));
  x.front() = a;
  x.back() = b;
  return x;
}

}  // namespace beamsym
