#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "beamsym/beam.hpp"
#include "beamsym/rational.hpp"

namespace beamsym {

/// Coefficients (ascending powers) of m (4m^3 - 32m^2 + 79m - 60): the condition
/// on the exponent of f = K (Ax+B)^m for (d11)-type constraints to admit a Moebius g.
std::vector<std::int64_t> exponent_polynomial();
/// {0, 3/2, 5/2, 4}, found exactly.
std::vector<Rational> exponent_roots();

/// f = K (Ax+B)^m with g a Moebius function of s = Ax+B (m in {0, 4}) or of
/// sqrt(s) (m in {3/2, 5/2}):
///   g = (L + M w)/(P + Q w),  w = s or sqrt(s).
struct GottliebParams {
  Rational exponent{3, 2};
  double K = 1.0, A = 1.0, B = 1.0;
  double L = 0.0, M = 1.0, P = 1.0, Q = 0.0;
  Interval domain{0.0, 1.0};
};

/// Throws ValidationError naming the violated condition.
void validate(const GottliebParams& p);

/// Profile with closed-form f and m = g'^4 f.
BeamProfile make_gottlieb(const GottliebParams& p, std::string name = {});

/// The closed-form g (not normalized to vanish at a).
Expr gottlieb_g(const GottliebParams& p);

/// {g, x} = g'''/g' - (3/2)(g''/g')^2.
template <typename Scalar, int Order>
Scalar schwarzian(const Jet<Scalar, Order>& g) {
  static_assert(Order >= 3, "the Schwarzian needs third derivatives");
  const Scalar g1 = g.derivative(1);
  if (g1 == Scalar(0)) throw DomainError("Schwarzian undefined where g' = 0");
  const Scalar r = g.derivative(2) / g1;
  return g.derivative(3) / g1 - Scalar(1.5) * r * r;
}

/// q = (3 f'^2/f^2 - 4 f''/f)/20, the potential of y'' + q y = 0 whose solution
/// ratios have Schwarzian 2q = 3f'^2/(10 f^2) - 2f''/(5f).
double normal_form_potential(const Expr& f, double x);

struct InitialConditions {
  double y1 = 1.0, dy1 = 0.0;
  double y2 = 0.0, dy2 = 1.0;
};

struct NormalFormODE {
  Expr f;
  Interval domain;
  std::vector<double> nodes;
  std::vector<double> y1, dy1, y2, dy2;  // y2 scaled so the Wronskian at a is 1

  double wronskian(std::size_t i) const { return y1[i] * dy2[i] - y2[i] * dy1[i]; }
  /// Order-3 jets of y1, y2 at node i, continued with the ODE.
  std::array<Jet<double, 3>, 2> local_jets(std::size_t i) const;
};

/// Integrates y'' = -q y from the left end of `domain` to every node (ascending).
NormalFormODE solve_normal_ode(const Expr& f, Interval domain, const std::vector<double>& nodes,
                               InitialConditions init = {});

struct GSamples {
  std::vector<double> nodes;
  std::vector<double> g;
  std::vector<double> schwarzian;  // from local ODE jets of y2/y1
  Interval valid;                  // shortened if y1 crosses zero
};

GSamples g_from_solutions(const NormalFormODE& ode);

/// (alpha, beta, gamma, delta) with to ~ (alpha from + beta)/(gamma from + delta),
/// from the null vector of the linearized system; residual is max relative misfit.
struct MobiusFit {
  std::array<double, 4> coefficients{};
  double max_residual = 0.0;
};

MobiusFit fit_mobius(const std::vector<double>& from, const std::vector<double>& to);

}  // namespace beamsym
