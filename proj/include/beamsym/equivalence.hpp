#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "beamsym/beam.hpp"
#include "beamsym/symmetry.hpp"

namespace beamsym {

/// Canonical representative of a non-generic class:
///   class1: U_XXXX + U_TT = 0
///   class2: (X U_XX)_XX + kappa X U_TT = 0, kappa = 1/(16 l2^4)
///   class3: U_XXXX + X^-4 U_TT = 0
struct CanonicalEquation {
  SymmetryLabel label = SymmetryLabel::class1;
  double kappa = 1.0;

  std::string form() const;

  /// Residual at X given the X-jet of U and U_TT there.
  TermSum<double> residual(const Jet<double, 4>& U, double U_TT, double X) const;

  /// The generators of the representative, in the same (tau, xi, eta) layout:
  /// class1 Y1, Y2, Y31 = 4T dT + 2X dX, Y4 = 2 dX;
  /// class2 Y1, Y2, Y3 = 4T dT + 2X dX - U dU;
  /// class3 Y1, Y2, Y3b = 2X dX + 3U dU.
  static Point3<double> y1(const Point3<double>&) { return {1.0, 0.0, 0.0}; }
  static Point3<double> y2(const Point3<double>& p) { return {0.0, 0.0, p[2]}; }
  static Point3<double> y31(const Point3<double>& p) { return {4.0 * p[0], 2.0 * p[1], 0.0}; }
  static Point3<double> y4(const Point3<double>&) { return {0.0, 2.0, 0.0}; }
  static Point3<double> y3a(const Point3<double>& p) { return {4.0 * p[0], 2.0 * p[1], -p[2]}; }
  static Point3<double> y3b(const Point3<double>& p) { return {0.0, 2.0 * p[1], 3.0 * p[2]}; }
};

/// Free constants of a transform: (k1, k2, k3), (l1, l2, l3) or (m1, m2, m3).
struct TransformConstants {
  double c1 = 0.0, c2 = 0.0, c3 = 1.0;
};

TransformConstants default_constants(SymmetryLabel label);

/// Point map (t, x, u) -> (T, X, U) onto the canonical representative, with G = g + offset:
///   class1: T = t + k1,      X = G + k2,      U = k3 u sqrt(f g'^3)
///   class2: T = t + l1 G^2,  X = 2 l2 G,      U = l3 u sqrt(f g'^3 / |G|)
///   class3: T = t + m1,      X = m2 exp(G),   U = m3 u sqrt(f g'^3 exp(3G))
class PointTransform {
 public:
  PointTransform(BeamProfile beam, SymmetryLabel label, std::optional<TransformConstants> constants = {},
                 double g_offset = 0.0);

  SymmetryLabel label() const { return label_; }
  const TransformConstants& constants() const { return k_; }
  double g_offset() const { return offset_; }
  const BeamProfile& beam() const { return beam_; }
  /// Subinterval where the map is regular (class2 excludes G = 0).
  const Interval& valid_domain() const { return valid_; }
  const CanonicalEquation& canonical() const { return canonical_; }

  template <typename T>
  Point3<T> push(const T& t, const T& x, const T& u) const;

  Point3<double> inverse(double T, double X, double U) const;

  /// U/u as an x-jet.
  template <int Order>
  Jet<double, Order> weight_jet(double x) const;

  /// X(x) as an x-jet.
  template <int Order>
  Jet<double, Order> coordinate_jet(double x) const;

 private:
  void check_point(double x) const;

  BeamProfile beam_;
  SymmetryLabel label_;
  TransformConstants k_;
  double offset_;
  double sign_ = 1.0;  // sign of G on the valid domain (class2)
  Interval valid_;
  CanonicalEquation canonical_;
};

PointTransform build_transform(const BeamProfile& beam, const Classification& cls,
                               std::optional<TransformConstants> constants = {});

/// Separable canonical solution U(T, X) = cos(omega T) Phi(X).
struct CanonicalMode {
  std::string name;
  double omega = 0.0;
  std::function<Jet<double, 4>(double X)> spatial;
};

/// class1: Phi = sin(beta X), omega = beta^2.
CanonicalMode uniform_sine_mode(double beta);
/// class1: Phi = cosh(beta X), omega = beta^2.
CanonicalMode uniform_cosh_mode(double beta);
/// class2: Phi = sum a_k X^k with a_k k(k-1)^2(k-2) = kappa omega^2 a_{k-4}, a_start = 1, start in {0, 1}.
CanonicalMode linear_weight_mode(double omega, double kappa, int start);
/// class3: Phi = X^r with r(r-1)(r-2)(r-3) = omega^2, r = 3/2 + sqrt(5/4 + sqrt(1 + omega^2)).
CanonicalMode inverse_quartic_mode(double omega);

/// Two default modes per class, used by the CLI and the acceptance suite.
std::vector<CanonicalMode> default_modes(const PointTransform& tr);

struct PullbackSample {
  double u = 0.0;
  TermSum<double> residual;  // of the original beam equation
};

/// u(t, x) = U(T(t, x), X(x)) / weight(x), checked against the original equation.
PullbackSample pullback_solution(const PointTransform& tr, const CanonicalMode& mode, double t, double x0);

/// Components (Gamma(T), Gamma(X), Gamma(U)) of the image of a generator at the image of p.
Point3<double> pushforward_generator(const PointTransform& tr, const Generator& gen, const Point3<double>& p);

/// Image of one generator of the original equation compared with its target
/// field on the canonical side, at a set of points.
struct GeneratorImage {
  std::string source;  // e.g. "X3"
  std::string target;  // e.g. "Y31 - 4k1 Y1 - k2 Y4"
  double max_error = 0.0;
};

/// The class's generator correspondence: class1 X1..X4, class2 X1, X2 and the
/// shifted X3, class3 X1, X2, X4.
std::vector<GeneratorImage> check_pushforward(const PointTransform& tr, const std::vector<Point3<double>>& points);

/// Max normalized residual of a pulled-back mode over nt x nx points:
/// t in [0, 1], x at interior Chebyshev nodes of the valid domain.
double pullback_grid_residual(const PointTransform& tr, const CanonicalMode& mode, int nt = 16, int nx = 16);

// ---------------------------------------------------------------------------

template <typename T>
Point3<T> PointTransform::push(const T& t, const T& x, const T& u) const {
  using std::exp;
  using std::sqrt;
  check_point(primal(x));
  const auto lf = local_fields(beam_, x);
  const T G = lf.g + offset_;
  const T base = lf.f * lf.g1 * lf.g1 * lf.g1;
  switch (label_) {
    case SymmetryLabel::class1:
      return {t + k_.c1, G + k_.c2, k_.c3 * u * sqrt(base)};
    case SymmetryLabel::class2:
      return {t + k_.c1 * G * G, 2.0 * k_.c2 * G, k_.c3 * u * sqrt(base / (sign_ * G))};
    case SymmetryLabel::class3:
      return {t + k_.c1, k_.c2 * exp(G), k_.c3 * u * sqrt(base * exp(3.0 * G))};
    case SymmetryLabel::generic:
      break;
  }
  throw ValidationError("no transformation exists for the generic class");
}

template <int Order>
Jet<double, Order> PointTransform::weight_jet(double x) const {
  check_point(x);
  const auto f = beam_.f_jet<Order>(x);
  const auto g1 = beam_.gprime_jet<Order>(x);
  const auto base = f * g1 * g1 * g1;
  const auto G = beam_.g_jet<Order>(x) + offset_;
  switch (label_) {
    case SymmetryLabel::class1:
      return k_.c3 * sqrt(base);
    case SymmetryLabel::class2:
      return k_.c3 * sqrt(base / (sign_ * G));
    case SymmetryLabel::class3:
      return k_.c3 * sqrt(base * exp(3.0 * G));
    case SymmetryLabel::generic:
      break;
  }
  throw ValidationError("no transformation exists for the generic class");
}

template <int Order>
Jet<double, Order> PointTransform::coordinate_jet(double x) const {
  check_point(x);
  const auto G = beam_.g_jet<Order>(x) + offset_;
  switch (label_) {
    case SymmetryLabel::class1:
      return G + k_.c2;
    case SymmetryLabel::class2:
      return 2.0 * k_.c2 * G;
    case SymmetryLabel::class3:
      return k_.c2 * exp(G);
    case SymmetryLabel::generic:
      break;
  }
  throw ValidationError("no transformation exists for the generic class");
}

}  // namespace beamsym
