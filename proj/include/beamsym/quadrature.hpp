#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "beamsym/errors.hpp"

namespace beamsym {

struct QuadratureRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule by Newton iteration on P_n from Chebyshev seeds.
QuadratureRule gauss_legendre(int n);

/// Integral of `fn` over [a, b] by globally adaptive bisection with a 10/20-point
/// Gauss-Legendre error estimate. Relative tolerance `tol` against the running total.
template <typename Fn>
double integrate(Fn&& fn, double a, double b, double tol = 1e-12, int max_depth = 40) {
  static const QuadratureRule coarse = gauss_legendre(10);
  static const QuadratureRule fine = gauss_legendre(20);
  if (a == b) return 0.0;

  auto apply = [&](const QuadratureRule& rule, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * fn(mid + half * rule.nodes[i]);
    return s * half;
  };

  struct Piece {
    double lo, hi, estimate;
    int depth;
  };
  std::vector<Piece> stack{{a, b, apply(fine, a, b), 0}};
  const double reference = std::abs(stack.front().estimate);
  double total = 0.0;
  while (!stack.empty()) {
    Piece p = stack.back();
    stack.pop_back();
    const double err = std::abs(p.estimate - apply(coarse, p.lo, p.hi));
    const double budget = tol * std::max(reference, 1e-300) * (p.hi - p.lo) / std::abs(b - a);
    if (err <= budget || err <= 1e-15 * std::abs(p.estimate) || p.depth >= max_depth) {
      if (p.depth >= max_depth && err > 1e3 * budget)
        throw ConvergenceError("adaptive quadrature failed to converge");
      total += p.estimate;
      continue;
    }
    const double mid = 0.5 * (p.lo + p.hi);
    stack.push_back({mid, p.hi, apply(fine, mid, p.hi), p.depth + 1});
    stack.push_back({p.lo, mid, apply(fine, p.lo, mid), p.depth + 1});
  }
  return total;
}

/// Interior Chebyshev-Gauss nodes on [a, b], ascending.
std::vector<double> chebyshev_nodes(int n, double a, double b);

/// Chebyshev-Lobatto nodes on [a, b] including both endpoints, ascending.
std::vector<double> chebyshev_lobatto_nodes(int n, double a, double b);

}  // namespace beamsym
