#include "beamsym/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "beamsym/quadrature.hpp"

namespace beamsym {

std::string CanonicalEquation::form() const {
  switch (label) {
    case SymmetryLabel::class1:
      return "U_XXXX + U_TT = 0";
    case SymmetryLabel::class2: {
      if (kappa == 1.0) return "(X U_XX)_XX + X U_TT = 0";
      std::ostringstream s;
      s.precision(17);
      s << "(X U_XX)_XX + " << kappa << " X U_TT = 0";
      return s.str();
    }
    case SymmetryLabel::class3:
      return "U_XXXX + X^-4 U_TT = 0";
    case SymmetryLabel::generic:
      break;
  }
  return "none";
}

TermSum<double> CanonicalEquation::residual(const Jet<double, 4>& U, double U_TT, double X) const {
  TermSum<double> r;
  switch (label) {
    case SymmetryLabel::class1:
      r += U.derivative(4);
      r += U_TT;
      break;
    case SymmetryLabel::class2:
      r += X * U.derivative(4);
      r += 2.0 * U.derivative(3);
      r += kappa * X * U_TT;
      break;
    case SymmetryLabel::class3:
      r += U.derivative(4);
      r += U_TT / (X * X * X * X);
      break;
    case SymmetryLabel::generic:
      throw ValidationError("the generic class has no canonical representative");
  }
  return r;
}

TransformConstants default_constants(SymmetryLabel label) {
  switch (label) {
    case SymmetryLabel::class2:
      return {0.0, 0.5, 1.0};
    case SymmetryLabel::class3:
      return {0.0, 1.0, 1.0};
    default:
      return {0.0, 0.0, 1.0};
  }
}

PointTransform::PointTransform(BeamProfile beam, SymmetryLabel label, std::optional<TransformConstants> constants,
                               double g_offset)
    : beam_(std::move(beam)),
      label_(label),
      k_(constants.value_or(default_constants(label))),
      offset_(label == SymmetryLabel::class2 ? g_offset : 0.0),
      valid_(beam_.domain()) {
  if (label_ == SymmetryLabel::generic)
    throw ValidationError("unsupported: the generic class 2A1 has no canonical transformation");
  for (double c : {k_.c1, k_.c2, k_.c3})
    if (!std::isfinite(c)) throw ValidationError("transform constants must be finite");
  if (!(k_.c3 > 0.0)) throw ValidationError("the weight constant (k3, l3, m3) must be positive");
  if (label_ != SymmetryLabel::class1 && k_.c2 == 0.0)
    throw ValidationError("the coordinate constant (l2, m2) must be nonzero");

  canonical_.label = label_;
  if (label_ == SymmetryLabel::class2) {
    canonical_.kappa = 1.0 / (16.0 * std::pow(k_.c2, 4));
    const Interval dom = beam_.domain();
    const double Ga = offset_;
    const double Gb = beam_.g_function().total() + offset_;
    if (Ga * Gb > 0.0) {
      sign_ = Ga > 0.0 ? 1.0 : -1.0;
    } else {
      // G vanishes at x* in [a, b]; keep the longer side with a margin.
      const double xs = beam_.g_function().inverse(-offset_);
      const double margin = 1e-6 * dom.length();
      if (dom.b - xs >= xs - dom.a) {
        valid_ = {xs + margin, dom.b};
        sign_ = Gb > 0.0 ? 1.0 : -1.0;
      } else {
        valid_ = {dom.a, xs - margin};
        sign_ = Ga > 0.0 ? 1.0 : -1.0;
      }
      if (!(valid_.a < valid_.b)) throw DomainError("class-two transform has no regular subinterval");
    }
  }
}

void PointTransform::check_point(double x) const {
  if (!valid_.contains(x, 1e-12 * valid_.length()))
    throw DomainError("point outside the transform's valid domain [" + std::to_string(valid_.a) + ", " +
                          std::to_string(valid_.b) + "]",
                      x);
}

Point3<double> PointTransform::inverse(double T, double X, double U) const {
  const GFunction& g = beam_.g_function();
  double x = 0.0, t = 0.0;
  switch (label_) {
    case SymmetryLabel::class1:
      x = g.inverse(X - k_.c2);
      t = T - k_.c1;
      break;
    case SymmetryLabel::class2: {
      const double G = X / (2.0 * k_.c2);
      x = g.inverse(G - offset_);
      t = T - k_.c1 * G * G;
      break;
    }
    case SymmetryLabel::class3:
      if (!(X / k_.c2 > 0.0)) throw DomainError("class-three inverse needs X/m2 > 0");
      x = g.inverse(std::log(X / k_.c2));
      t = T - k_.c1;
      break;
    case SymmetryLabel::generic:
      throw ValidationError("no transformation exists for the generic class");
  }
  return {t, x, U / weight_jet<0>(x).value()};
}

PointTransform build_transform(const BeamProfile& beam, const Classification& cls,
                               std::optional<TransformConstants> constants) {
  return PointTransform(beam, cls.label, constants, cls.g_offset);
}

// ---------------------------------------------------------------------------
// Canonical modes

CanonicalMode uniform_sine_mode(double beta) {
  return {"sin(" + std::to_string(beta) + " X)", beta * beta,
          [beta](double X) { return sin(beta * Jet<double, 4>::variable(X)); }};
}

CanonicalMode uniform_cosh_mode(double beta) {
  return {"cosh(" + std::to_string(beta) + " X)", beta * beta, [beta](double X) {
            const auto e = exp(beta * Jet<double, 4>::variable(X));
            return 0.5 * (e + 1.0 / e);
          }};
}

CanonicalMode linear_weight_mode(double omega, double kappa, int start) {
  if (start != 0 && start != 1) throw ValidationError("series start must be 0 or 1");
  return {"series" + std::to_string(start) + "(omega=" + std::to_string(omega) + ")", omega,
          [omega, kappa, start](double X) {
            // Taylor coefficient j at X of sum a_k X^k is sum_k a_k C(k, j) X^(k-j).
            Jet<double, 4>::Coefficients c = Jet<double, 4>::Coefficients::Zero();
            double a = 1.0;
            for (int k = start; k < 4000; k += 4) {
              if (k > start) a *= kappa * omega * omega / (double(k) * (k - 1) * (k - 1) * (k - 2));
              double binom = 1.0;
              double biggest = 0.0;
              for (int j = 0; j <= 4 && j <= k; ++j) {
                if (j > 0) binom *= double(k - j + 1) / j;
                const double term = a * binom * std::pow(X, k - j);
                c[j] += term;
                biggest = std::max(biggest, std::abs(term));
              }
              if (k > start + 8 && biggest <= 1e-18 * c.abs().maxCoeff()) break;
            }
            return Jet<double, 4>(c);
          }};
}

CanonicalMode inverse_quartic_mode(double omega) {
  const double r = 1.5 + std::sqrt(1.25 + std::sqrt(1.0 + omega * omega));
  return {"X^" + std::to_string(r), omega, [r](double X) {
            if (!(X > 0.0)) throw DomainError("X^r mode needs X > 0", X);
            return pow(Jet<double, 4>::variable(X), r);
          }};
}

std::vector<CanonicalMode> default_modes(const PointTransform& tr) {
  switch (tr.label()) {
    case SymmetryLabel::class1:
      return {uniform_sine_mode(3.0), uniform_cosh_mode(2.0)};
    case SymmetryLabel::class2:
      return {linear_weight_mode(2.0, tr.canonical().kappa, 0), linear_weight_mode(5.0, tr.canonical().kappa, 1)};
    case SymmetryLabel::class3:
      return {inverse_quartic_mode(1.0), inverse_quartic_mode(4.0)};
    case SymmetryLabel::generic:
      break;
  }
  return {};
}

PullbackSample pullback_solution(const PointTransform& tr, const CanonicalMode& mode, double t, double x0) {
  using J4 = Jet<double, 4>;
  const J4 X = tr.coordinate_jet<4>(x0);
  J4 T = J4::constant(t + tr.constants().c1);
  if (tr.label() == SymmetryLabel::class2) {
    const J4 G = tr.beam().g_jet<4>(x0) + tr.g_offset();
    T = t + tr.constants().c1 * G * G;
  }
  const J4 U = cos(mode.omega * T) * compose(mode.spatial(X.value()), X);
  const J4 u = U / tr.weight_jet<4>(x0);
  PullbackSample s;
  s.u = u.value();
  s.residual = pde_residual(tr.beam(), FieldSample{u, -mode.omega * mode.omega * u.value()}, x0);
  return s;
}

Point3<double> pushforward_generator(const PointTransform& tr, const Generator& gen, const Point3<double>& p) {
  const auto v = generator_at(gen, tr.beam(), p[0], p[1], p[2]);
  Point3<Jet1> q;
  for (std::size_t i = 0; i < 3; ++i) {
    Jet1::Coefficients c;
    c << p[i], v[i];
    q[i] = Jet1(c);
  }
  const auto image = tr.push(q[0], q[1], q[2]);
  return {image[0].coefficient(1), image[1].coefficient(1), image[2].coefficient(1)};
}

std::vector<GeneratorImage> check_pushforward(const PointTransform& tr, const std::vector<Point3<double>>& points) {
  using Target = std::function<Point3<double>(const Point3<double>&)>;
  struct Pair {
    std::string source, target;
    Generator gen;
    Target field;
  };
  const auto& k = tr.constants();
  std::vector<Pair> pairs{{"X1", "Y1", Generator::X1(), CanonicalEquation::y1},
                          {"X2", "Y2", Generator::X2(), CanonicalEquation::y2}};
  switch (tr.label()) {
    case SymmetryLabel::class1:
      pairs.push_back({"X3", "Y31 - 4k1 Y1 - k2 Y4", Generator::X3(), [k](const Point3<double>& p) {
                         return Point3<double>{4.0 * (p[0] - k.c1), 2.0 * (p[1] - k.c2), 0.0};
                       }});
      pairs.push_back({"X4", "Y4", Generator::X4(), CanonicalEquation::y4});
      break;
    case SymmetryLabel::class2:
      // X3 with g replaced by g + offset, i.e. X3 + offset X4.
      pairs.push_back({"X3", "Y3a", Generator::X3() + tr.g_offset() * Generator::X4(), CanonicalEquation::y3a});
      break;
    case SymmetryLabel::class3:
      pairs.push_back({"X4", "Y3b", Generator::X4(), CanonicalEquation::y3b});
      break;
    case SymmetryLabel::generic:
      throw ValidationError("no transformation exists for the generic class");
  }
  std::vector<GeneratorImage> out;
  for (const auto& pair : pairs) {
    GeneratorImage img{pair.source, pair.target, 0.0};
    for (const auto& p : points) {
      const auto image = pushforward_generator(tr, pair.gen, p);
      const auto q = tr.push(p[0], p[1], p[2]);
      const auto want = pair.field(q);
      for (std::size_t i = 0; i < 3; ++i)
        img.max_error = std::max(img.max_error, std::abs(image[i] - want[i]) / std::max(1.0, std::abs(want[i])));
    }
    out.push_back(img);
  }
  return out;
}

double pullback_grid_residual(const PointTransform& tr, const CanonicalMode& mode, int nt, int nx) {
  const Interval v = tr.valid_domain();
  double worst = 0.0;
  for (int j = 0; j < nt; ++j) {
    const double t = nt > 1 ? double(j) / (nt - 1) : 0.0;
    for (double x : chebyshev_nodes(nx, v.a, v.b))
      worst = std::max(worst, pullback_solution(tr, mode, t, x).residual.normalized());
  }
  return worst;
}

}  // namespace beamsym
