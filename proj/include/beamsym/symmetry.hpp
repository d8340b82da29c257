#pragma once

#include <array>
#include <functional>
#include <string_view>
#include <vector>

#include "beamsym/beam.hpp"
#include "beamsym/jet.hpp"
#include "beamsym/term_sum.hpp"

namespace beamsym {

/// Derivatives f^(0..5) and g^(0..6) at one point, the inputs of every
/// determining function.
template <typename Scalar>
struct ProfileDerivatives {
  std::array<Scalar, 6> f{};
  std::array<Scalar, 7> g{};

  static ProfileDerivatives from_jets(const Jet<Scalar, 6>& fj, const Jet<Scalar, 6>& gj) {
    ProfileDerivatives d;
    for (int k = 0; k <= 5; ++k) d.f[static_cast<std::size_t>(k)] = fj.derivative(k);
    for (int k = 0; k <= 6; ++k) d.g[static_cast<std::size_t>(k)] = gj.derivative(k);
    return d;
  }

  void check() const {
    if (!(f[0] > Scalar(0))) throw DomainError("flexural rigidity must be positive");
    if (g[1] == Scalar(0)) throw DomainError("g' vanishes");
  }
};

template <typename Scalar>
struct HValues {
  TermSum<Scalar> h11, h12, h21, h22;

  std::array<Scalar, 4> normalized() const {
    return {h11.normalized(), h12.normalized(), h21.normalized(), h22.normalized()};
  }
};

/// The four determining functions. Symmetry conditions read
/// c1 H11 + c3 H12 = 0 and c1 H21 + c3 H22 = 0, and H11 - g H12, H21 - g H22
/// do not involve the value of g.
template <typename Scalar>
HValues<Scalar> h_functions(const ProfileDerivatives<Scalar>& d) {
  d.check();
  const auto& [f, f1, f2, f3, f4, f5] = d.f;
  const auto& [g, g1, g2, g3, g4, g5, g6] = d.g;
  HValues<Scalar> h;

  auto& a = h.h11;
  a += 6 * f1 * f1 / f;
  a += -6 * g * f1 * f1 * f1 / (f * f * g1);
  a += -8 * f2;
  a += 10 * g * f1 * f2 / (f * g1);
  a += -6 * g * f1 * f1 * g2 / (f * g1 * g1);
  a += 8 * g * f2 * g2 / (g1 * g1);
  a += 30 * f * g2 * g2 / (g1 * g1);
  a += -60 * f * g * g2 * g2 * g2 / (g1 * g1 * g1 * g1);
  a += -4 * g * f3 / g1;
  a += -20 * f * g3 / g1;
  a += 60 * f * g * g2 * g3 / (g1 * g1 * g1);
  a += -10 * f * g * g4 / (g1 * g1);

  auto& b = h.h12;
  b += -6 * f1 * f1 * f1 / (f * f * g1);
  b += 10 * f1 * f2 / (f * g1);
  b += -6 * f1 * f1 * g2 / (f * g1 * g1);
  b += 8 * f2 * g2 / (g1 * g1);
  b += -60 * f * g2 * g2 * g2 / (g1 * g1 * g1 * g1);
  b += -4 * f3 / g1;
  b += 60 * f * g2 * g3 / (g1 * g1 * g1);
  b += -10 * f * g4 / (g1 * g1);

  const Scalar f_2 = f * f, f_3 = f_2 * f, f_4 = f_3 * f;
  const Scalar p1 = f1, p2 = f1 * f1, p3 = p2 * f1, p4 = p3 * f1, p5 = p4 * f1;
  const Scalar q1 = g1, q2 = g1 * g1, q3 = q2 * g1, q4 = q3 * g1, q5 = q4 * g1, q6 = q5 * g1;
  const Scalar s2 = g2 * g2, s3 = s2 * g2, s4 = s3 * g2, s5 = s4 * g2;

  auto& c = h.h21;
  c += 12 * p4 / f_3;
  c += -12 * g * p5 / (f_4 * q1);
  c += -28 * p2 * f2 / f_2;
  c += 34 * g * p3 * f2 / (f_3 * q1);
  c += 10 * f2 * f2 / f;
  c += -21 * g * p1 * f2 * f2 / (f_2 * q1);
  c += -12 * g * p4 * g2 / (f_3 * q2);
  c += 6 * p3 * g2 / (f_2 * q1);
  c += 28 * g * p2 * f2 * g2 / (f_2 * q2);
  c += -11 * p1 * f2 * g2 / (f * q1);
  c += -10 * g * f2 * f2 * g2 / (f * q2);
  c += -12 * g * p3 * s2 / (f_2 * q3);
  c += 6 * p2 * s2 / (f * q2);
  c += 22 * g * p1 * f2 * s2 / (f * q3);
  c += -3 * f2 * s2 / q2;
  c += -12 * g * p2 * s3 / (f * q4);
  c += -60 * p1 * s3 / q3;
  c += 6 * g * f2 * s3 / q4;
  c += 120 * g * p1 * s4 / q5;
  c += 180 * f * s4 / q4;
  c += -360 * f * g * s5 / q6;
  c += 10 * p1 * f3 / f;
  c += -12 * g * p2 * f3 / (f_2 * q1);
  c += 9 * g * f2 * f3 / (f * q1);
  c += -10 * g * p1 * g2 * f3 / (f * q2);
  c += 6 * g2 * f3 / q1;
  c += -12 * g * s2 * f3 / q3;
  c += 6 * g * p3 * g3 / (f_2 * q2);
  c += -4 * p2 * g3 / (f * q1);
  c += -11 * g * p1 * f2 * g3 / (f * q2);
  c += 2 * f2 * g3 / q1;
  c += 12 * g * p2 * g2 * g3 / (f * q3);
  c += 70 * p1 * g2 * g3 / q2;
  c += -6 * g * f2 * g2 * g3 / q3;
  c += -180 * g * p1 * s2 * g3 / q4;
  c += -300 * f * s2 * g3 / q3;
  c += 720 * f * g * s3 * g3 / q5;
  c += 6 * g * f3 * g3 / q2;
  c += 30 * g * p1 * g3 * g3 / q3;
  c += 60 * f * g3 * g3 / q2;
  c += -270 * f * g * g2 * g3 * g3 / q4;
  c += -4 * f4;
  c += 3 * g * p1 * f4 / (f * q1);
  c += 4 * g * g2 * f4 / q2;
  c += -2 * g * p2 * g4 / (f * q2);
  c += -15 * p1 * g4 / q1;
  c += g * f2 * g4 / q2;
  c += 40 * g * p1 * g2 * g4 / q3;
  c += 75 * f * g2 * g4 / q2;
  c += -180 * f * g * s2 * g4 / q4;
  c += 60 * f * g * g3 * g4 / q3;
  c += -g * f5 / q1;
  c += -5 * g * p1 * g5 / q2;
  c += -12 * f * g5 / q1;
  c += 30 * f * g * g2 * g5 / q3;
  c += -3 * f * g * g6 / q2;

  auto& e = h.h22;
  e += -12 * p5 / (f_4 * q1);
  e += 34 * p3 * f2 / (f_3 * q1);
  e += -21 * p1 * f2 * f2 / (f_2 * q1);
  e += -12 * p4 * g2 / (f_3 * q2);
  e += 28 * p2 * f2 * g2 / (f_2 * q2);
  e += -10 * f2 * f2 * g2 / (f * q2);
  e += -12 * p3 * s2 / (f_2 * q3);
  e += 22 * p1 * f2 * s2 / (f * q3);
  e += -12 * p2 * s3 / (f * q4);
  e += 6 * f2 * s3 / q4;
  e += 120 * p1 * s4 / q5;
  e += -360 * f * s5 / q6;
  e += -12 * p2 * f3 / (f_2 * q1);
  e += 9 * f2 * f3 / (f * q1);
  e += -10 * p1 * g2 * f3 / (f * q2);
  e += -12 * s2 * f3 / q3;
  e += 6 * p3 * g3 / (f_2 * q2);
  e += -11 * p1 * f2 * g3 / (f * q2);
  e += 12 * p2 * g2 * g3 / (f * q3);
  e += -6 * f2 * g2 * g3 / q3;
  e += -180 * p1 * s2 * g3 / q4;
  e += 720 * f * s3 * g3 / q5;
  e += 6 * f3 * g3 / q2;
  e += 30 * p1 * g3 * g3 / q3;
  e += -270 * f * g2 * g3 * g3 / q4;
  e += 3 * p1 * f4 / (f * q1);
  e += 4 * g2 * f4 / q2;
  e += -2 * p2 * g4 / (f * q2);
  e += f2 * g4 / q2;
  e += 40 * p1 * g2 * g4 / q3;
  e += -180 * f * s2 * g4 / q4;
  e += 60 * f * g3 * g4 / q3;
  e += -f5 / q1;
  e += -5 * p1 * g5 / q2;
  e += 30 * f * g2 * g5 / q3;
  e += -3 * f * g6 / q2;
  return h;
}

template <typename Scalar>
HValues<Scalar> h_functions(const Jet<Scalar, 6>& fj, const Jet<Scalar, 6>& gj) {
  return h_functions(ProfileDerivatives<Scalar>::from_jets(fj, gj));
}

/// Residuals of the reduced constraint systems, each as (lhs - rhs) with the
/// magnitudes of lhs and every rhs term as scale.
template <typename Scalar>
struct ClassOneResiduals {
  TermSum<Scalar> r1;  // g''' in terms of f, f', f'', g', g''
  TermSum<Scalar> r2;  // f'''' in terms of f .. f'''
};

template <typename Scalar>
ClassOneResiduals<Scalar> residual_class1(const ProfileDerivatives<Scalar>& d) {
  d.check();
  const auto& [f, f1, f2, f3, f4, f5] = d.f;
  const auto& g1 = d.g[1];
  const auto& g2 = d.g[2];
  const auto& g3 = d.g[3];
  ClassOneResiduals<Scalar> r;
  r.r1 += g3;
  r.r1 -= Scalar(3) / 10 * g1 * f1 * f1 / (f * f);
  r.r1 -= -Scalar(2) / 5 * g1 * f2 / f;
  r.r1 -= Scalar(3) / 2 * g2 * g2 / g1;

  r.r2 += f4;
  r.r2 -= f1 * f3 / f;
  r.r2 -= Scalar(11) / 10 * f2 * f2 / f;
  r.r2 -= -Scalar(12) / 5 * f1 * f1 * f2 / (f * f);
  r.r2 -= Scalar(9) / 10 * f1 * f1 * f1 * f1 / (f * f * f);
  return r;
}

template <typename Scalar>
struct ClassTwoResiduals {
  TermSum<Scalar> r3;          // g'''' from H11 = 0
  TermSum<Scalar> r3_printed;  // the same relation as commonly printed, kept for comparison
  TermSum<Scalar> r4;          // f^(5) from H21 = 0 after eliminating g''''..g^(6)
};

/// Requires g != 0: the relations divide by g.
template <typename Scalar>
ClassTwoResiduals<Scalar> residual_class2(const ProfileDerivatives<Scalar>& d) {
  d.check();
  const auto& [f, f1, f2, f3, f4, f5] = d.f;
  const auto& [g, g1, g2, g3, g4, g5, g6] = d.g;
  if (g == Scalar(0)) throw DomainError("class-two constraints are singular where g = 0");
  ClassTwoResiduals<Scalar> r;

  auto& a = r.r3;
  a += g4;
  a -= 6 * g2 * g3 / g1;
  a -= -6 * g2 * g2 * g2 / (g1 * g1);
  a -= -2 * g1 * g3 / g;
  a -= 3 * g2 * g2 / g;
  a -= Scalar(4) / 5 * f2 * g2 / f;
  a -= -Scalar(4) / 5 * f2 * g1 * g1 / (f * g);
  a -= -Scalar(2) / 5 * f3 * g1 / f;
  a -= -Scalar(3) / 5 * f1 * f1 * g2 / (f * f);
  a -= Scalar(3) / 5 * f1 * f1 * g1 * g1 / (f * f * g);
  a -= f1 * f2 * g1 / (f * f);
  a -= -Scalar(3) / 5 * f1 * f1 * f1 * g1 / (f * f * f);

  auto& p = r.r3_printed;
  p += g4;
  p -= 6 * g2 * g3 / g1;
  p -= -2 * g1 * g3 / g;
  p -= -Scalar(2) / 5 * g1 * f3 / f;
  p -= 6 * g2 * g2 * g2 / (g1 * g1);
  p -= 3 * g2 * g2 / g;
  p -= Scalar(4) / 5 * g2 * f2 / f;
  p -= -Scalar(3) / 5 * f1 * f1 * g2 / g;
  p -= g1 * f1 * f2 / f;
  p -= -Scalar(4) / 5 * g1 * g1 * f2 / (g * f);
  p -= -Scalar(3) / 5 * g1 * f1 * f1 * f1 / (f * f * f);
  p -= Scalar(3) / 5 * g1 * g1 * f1 * f1 / (f * f * g);

  const Scalar p2 = f1 * f1, p3 = p2 * f1, p4 = p3 * f1, p5 = p4 * f1;
  auto& b = r.r4;
  b += f5;
  b -= -Scalar(18) / 5 * p5 / (f * f * f * f);
  b -= Scalar(18) / 5 * p4 * g1 / (f * f * f * g);
  b -= Scalar(54) / 5 * p3 * f2 / (f * f * f);
  b -= -Scalar(48) / 5 * p2 * g1 * f2 / (f * f * g);
  b -= -7 * f1 * f2 * f2 / (f * f);
  b -= Scalar(22) / 5 * g1 * f2 * f2 / (f * g);
  b -= -Scalar(18) / 5 * p4 * g2 / (f * f * f * g1);
  b -= Scalar(48) / 5 * p2 * f2 * g2 / (f * f * g1);
  b -= -Scalar(22) / 5 * f2 * f2 * g2 / (f * g1);
  b -= -Scalar(22) / 5 * p2 * f3 / (f * f);
  b -= 4 * f1 * g1 * f3 / (f * g);
  b -= Scalar(16) / 5 * f2 * f3 / f;
  b -= -4 * f1 * g2 * f3 / (f * g1);
  b -= 2 * f1 * f4 / f;
  b -= -4 * g1 * f4 / g;
  b -= 4 * g2 * f4 / g1;
  return r;
}

template <typename Scalar>
struct ClassThreeResiduals {
  TermSum<Scalar> r5;  // g'''' from H12 = 0
  TermSum<Scalar> r6;  // f^(5) from H22 = 0 after eliminating g''''..g^(6)
};

template <typename Scalar>
ClassThreeResiduals<Scalar> residual_class3(const ProfileDerivatives<Scalar>& d) {
  d.check();
  const auto& [f, f1, f2, f3, f4, f5] = d.f;
  const auto& g1 = d.g[1];
  const auto& g2 = d.g[2];
  const auto& g3 = d.g[3];
  const auto& g4 = d.g[4];
  ClassThreeResiduals<Scalar> r;

  auto& a = r.r5;
  a += g4;
  a -= -Scalar(3) / 5 * f1 * f1 * f1 * g1 / (f * f * f);
  a -= f1 * g1 * f2 / (f * f);
  a -= -Scalar(3) / 5 * f1 * f1 * g2 / (f * f);
  a -= Scalar(4) / 5 * f2 * g2 / f;
  a -= -6 * g2 * g2 * g2 / (g1 * g1);
  a -= -Scalar(2) / 5 * g1 * f3 / f;
  a -= 6 * g2 * g3 / g1;

  const Scalar p2 = f1 * f1, p3 = p2 * f1, p4 = p3 * f1, p5 = p4 * f1;
  auto& b = r.r6;
  b += f5;
  b -= -Scalar(18) / 5 * p5 / (f * f * f * f);
  b -= Scalar(54) / 5 * p3 * f2 / (f * f * f);
  b -= -7 * f1 * f2 * f2 / (f * f);
  b -= -Scalar(18) / 5 * p4 * g2 / (f * f * f * g1);
  b -= Scalar(48) / 5 * p2 * f2 * g2 / (f * f * g1);
  b -= -Scalar(22) / 5 * f2 * f2 * g2 / (f * g1);
  b -= -Scalar(22) / 5 * p2 * f3 / (f * f);
  b -= Scalar(16) / 5 * f2 * f3 / f;
  b -= -4 * f1 * g2 * f3 / (f * g1);
  b -= 2 * f1 * f4 / f;
  b -= 4 * g2 * f4 / g1;
  return r;
}

// ---------------------------------------------------------------------------
// Classification

/// Quotient symmetry algebra of the beam equation.
enum class SymmetryLabel {
  generic,  // 2A1: time translation and u-scaling only
  class3,   // 3A1
  class2,   // A1 (+) A2
  class1,   // A3,3 (+) A1: equivalent to the uniform beam
};

std::string_view label_name(SymmetryLabel label);

struct SampleRow {
  double x = 0.0;
  std::array<double, 4> h{};          // normalized H11, H12, H21, H22 with g(a) = 0
  std::array<double, 2> h_shifted{};  // normalized H11, H21 with g shifted by the class-two offset
  // Normalized R1, R2, R3, R3 (printed), R4, R5, R6; R3 and R4 use the shifted g.
  std::array<double, 7> r{};
  bool shifted_g_excluded = false;  // shifted g vanishes here; R3/R4 skipped (reported as 0)
};

struct Classification {
  SymmetryLabel label = SymmetryLabel::generic;
  double tol = 1e-9;
  /// Offset c such that g + c satisfies the class-two pattern best (least squares).
  double g_offset = 0.0;
  double class1_residual = 0.0;  // max over samples of all four normalized H
  double class2_residual = 0.0;  // max of H11, H21 with the offset applied
  double class3_residual = 0.0;  // max of H12, H22
  std::array<double, 4> h_max{};
  std::array<double, 7> r_max{};
  int excluded_samples = 0;
  std::vector<SampleRow> samples;
};

inline constexpr std::array<std::string_view, 7> kReducedResidualNames = {"R1", "R2",        "R3", "R3_printed",
                                                                          "R4", "R5", "R6"};

/// Evaluates the determining functions at `samples` interior Chebyshev nodes and
/// assigns the label by precedence class1, class2, class3, generic.
Classification classify(const BeamProfile& beam, int samples = 33, double tol = 1e-9);

// ---------------------------------------------------------------------------
// Generators

/// c1 X3 + c2 X1 + c3 X4 + c4 X2 with
///   tau = 4 c1 t + c2,  xi = 2 (c1 G + c3) / g',
///   eta = (c4 - c1 (f' G/(f g') + 3 G g''/g'^2) - c3 (f'/(f g') + 3 g''/g'^2)) u,
/// where G = g + g_offset.
struct Generator {
  double c1 = 0.0, c2 = 0.0, c3 = 0.0, c4 = 0.0;

  static Generator X1() { return {0.0, 1.0, 0.0, 0.0}; }
  static Generator X2() { return {0.0, 0.0, 0.0, 1.0}; }
  static Generator X3() { return {1.0, 0.0, 0.0, 0.0}; }
  static Generator X4() { return {0.0, 0.0, 1.0, 0.0}; }

  friend Generator operator+(const Generator& a, const Generator& b) {
    return {a.c1 + b.c1, a.c2 + b.c2, a.c3 + b.c3, a.c4 + b.c4};
  }
  friend Generator operator*(double s, const Generator& a) { return {s * a.c1, s * a.c2, s * a.c3, s * a.c4}; }
};

template <typename T>
using Point3 = std::array<T, 3>;

/// Components (tau, xi, eta) of a generator at (t, x, u).
template <typename T>
Point3<T> generator_at(const Generator& gen, const BeamProfile& beam, const T& t, const T& x, const T& u,
                       double g_offset = 0.0) {
  const auto lf = local_fields(beam, x);
  const T G = lf.g + g_offset;
  const T tau = 4.0 * gen.c1 * t + gen.c2;
  const T xi = 2.0 * (gen.c1 * G + gen.c3) / lf.g1;
  const T a = lf.f1 / (lf.f * lf.g1) + 3.0 * lf.g2 / (lf.g1 * lf.g1);
  const T eta = (gen.c4 - gen.c1 * (G * a) - gen.c3 * a) * u;
  return {tau, xi, eta};
}

using Jet1 = Jet<double, 1>;
/// A vector field on (t, x, u) evaluable along first-order jets.
using VectorField = std::function<Point3<Jet1>(const Point3<Jet1>&)>;

VectorField vector_field(const BeamProfile& beam, const Generator& gen, double g_offset = 0.0);

/// [A, B] = A(B) - B(A) componentwise at p; A(B) is the derivative of B along
/// the flow direction A(p), taken with first-order jets.
Point3<double> lie_bracket(const VectorField& A, const VectorField& B, const Point3<double>& p);

/// Evaluates a field at a plain point.
Point3<double> evaluate_field(const VectorField& F, const Point3<double>& p);

}  // namespace beamsym
