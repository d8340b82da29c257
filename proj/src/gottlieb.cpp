#include "beamsym/gottlieb.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

#include "beamsym/ode.hpp"

namespace beamsym {

std::vector<std::int64_t> exponent_polynomial() { return {0, -60, 79, -32, 4}; }

std::vector<Rational> exponent_roots() { return rational_roots(exponent_polynomial()); }

namespace {

bool is_admissible(const Rational& m) {
  const auto roots = exponent_roots();
  return std::find(roots.begin(), roots.end(), m) != roots.end();
}

bool uses_sqrt(const Rational& m) { return !m.is_integer(); }

Expr rational_expr(const Rational& r) {
  if (r.is_integer()) return number(static_cast<double>(r.num()));
  const Expr q = number(static_cast<double>(std::abs(r.num()))) / number(static_cast<double>(r.den()));
  return r.num() < 0 ? -q : q;
}

// A x + B with unit coefficients and zero terms dropped.
Expr affine(double A, double B) {
  Expr ax = A == 1.0 ? variable() : number(A) * variable();
  if (B == 0.0) return ax;
  return B > 0.0 ? ax + number(B) : ax - number(-B);
}

Expr scaled(double c, const Expr& e) { return c == 1.0 ? e : number(c) * e; }

double moebius_denominator(const GottliebParams& p, double x) {
  const double s = p.A * x + p.B;
  return p.P + p.Q * (uses_sqrt(p.exponent) ? std::sqrt(s) : s);
}

}  // namespace

void validate(const GottliebParams& p) {
  if (!is_admissible(p.exponent))
    throw ValidationError("exponent " + p.exponent.str() + " is not a root of m(4m^3 - 32m^2 + 79m - 60)");
  if (!(p.K > 0.0)) throw ValidationError("K must be positive");
  if (p.A == 0.0) throw ValidationError("A must be nonzero");
  if (!(p.domain.a < p.domain.b)) throw ValidationError("interval must satisfy a < b");
  for (double x : {p.domain.a, p.domain.b})
    if (!(p.A * x + p.B > 0.0)) throw ValidationError("Ax + B must be positive on the interval");
  if (p.L * p.Q - p.M * p.P == 0.0) throw ValidationError("Moebius constants need LQ - MP != 0");
  // The denominator is monotone in s, so endpoint signs decide.
  const double da = moebius_denominator(p, p.domain.a);
  const double db = moebius_denominator(p, p.domain.b);
  if (da == 0.0 || db == 0.0 || (da > 0.0) != (db > 0.0))
    throw ValidationError("Moebius denominator vanishes on the interval");
}

Expr gottlieb_g(const GottliebParams& p) {
  validate(p);
  const Expr s = affine(p.A, p.B);
  const Expr w = uses_sqrt(p.exponent) ? call(Function::sqrt, s) : s;
  auto lin = [&](double c0, double c1) {
    if (c1 == 0.0) return number(c0);
    if (c0 == 0.0) return scaled(c1, w);
    return number(c0) + scaled(c1, w);
  };
  if (p.Q == 0.0) {
    const Expr num = lin(p.L / p.P, p.M / p.P);
    return num;
  }
  return lin(p.L, p.M) / lin(p.P, p.Q);
}

BeamProfile make_gottlieb(const GottliebParams& p, std::string name) {
  validate(p);
  const Rational& m = p.exponent;
  const Expr s = affine(p.A, p.B);
  const Expr f = m == Rational(0) ? number(p.K) : scaled(p.K, pow(s, rational_expr(m)));

  const double det = p.M * p.P - p.L * p.Q;
  Expr density;
  if (uses_sqrt(m)) {
    const double C = p.K * std::pow(p.A * det / 2.0, 4);
    const Expr power = pow(s, rational_expr(m - Rational(2)));
    if (p.Q == 0.0) {
      density = scaled(C / std::pow(p.P, 8), power);
    } else {
      const Expr den = number(p.P) + scaled(p.Q, call(Function::sqrt, s));
      density = scaled(C, power) / pow(den, number(8));
    }
  } else {
    const double C = p.K * std::pow(p.A * det, 4);
    const bool constant_power = m == Rational(0);
    if (p.Q == 0.0) {
      const double c = C / std::pow(p.P, 8);
      density = constant_power ? number(c) : scaled(c, pow(s, rational_expr(m)));
    } else {
      const Expr den = number(p.P) + scaled(p.Q, s);
      const Expr num = constant_power ? number(C) : scaled(C, pow(s, rational_expr(m)));
      density = num / pow(den, number(8));
    }
  }
  if (name.empty()) name = "gottlieb m=" + m.str();
  return BeamProfile(std::move(name), f, density, p.domain);
}

// ---------------------------------------------------------------------------
// Normal-form ODE

double normal_form_potential(const Expr& f, double x) {
  const auto fj = eval_jet<2>(f, x);
  const double r1 = fj.derivative(1) / fj.value();
  const double r2 = fj.derivative(2) / fj.value();
  return (3.0 * r1 * r1 - 4.0 * r2) / 20.0;
}

std::array<Jet<double, 3>, 2> NormalFormODE::local_jets(std::size_t i) const {
  const auto fj = eval_jet<3>(f, nodes[i]);
  // q and q' from the f-jet: q = (3 (f'/f)^2 - 4 f''/f)/20.
  const auto fd = derivative(fj);
  const auto r1 = truncate<1>(fd) / truncate<1>(fj);
  const auto r2 = truncate<1>(derivative(fd)) / truncate<1>(fj);
  const auto q = (3.0 * r1 * r1 - 4.0 * r2) / 20.0;
  auto jet = [&](double y, double dy) {
    const double ddy = -q.value() * y;
    const double dddy = -q.derivative(1) * y - q.value() * dy;
    return Jet<double, 3>::from_derivatives({y, dy, ddy, dddy});
  };
  return {jet(y1[i], dy1[i]), jet(y2[i], dy2[i])};
}

NormalFormODE solve_normal_ode(const Expr& f, Interval domain, const std::vector<double>& nodes,
                               InitialConditions init) {
  if (nodes.empty()) throw ValidationError("normal-form ODE needs at least one output node");
  if (!std::is_sorted(nodes.begin(), nodes.end()) || nodes.front() < domain.a || nodes.back() > domain.b)
    throw ValidationError("output nodes must be ascending and inside the interval");
  const double w0 = init.y1 * init.dy2 - init.y2 * init.dy1;
  if (w0 == 0.0) throw ValidationError("initial conditions are linearly dependent");

  const OdeRhs rhs = [&f](double x, const Eigen::VectorXd& y) {
    const double q = normal_form_potential(f, x);
    Eigen::VectorXd d(4);
    d << y[1], -q * y[0], y[3], -q * y[2];
    return d;
  };
  Eigen::VectorXd y0(4);
  y0 << init.y1, init.dy1, init.y2 / w0, init.dy2 / w0;
  const auto states = integrate_ode(rhs, domain.a, y0, nodes);

  NormalFormODE ode{f, domain, nodes, {}, {}, {}, {}};
  for (const auto& s : states) {
    ode.y1.push_back(s[0]);
    ode.dy1.push_back(s[1]);
    ode.y2.push_back(s[2]);
    ode.dy2.push_back(s[3]);
  }
  return ode;
}

GSamples g_from_solutions(const NormalFormODE& ode) {
  GSamples out;
  out.valid = ode.domain;
  const double sign = ode.y1.front() >= 0.0 ? 1.0 : -1.0;
  for (std::size_t i = 0; i < ode.nodes.size(); ++i) {
    if (!(sign * ode.y1[i] > 0.0)) {
      out.valid.b = i > 0 ? ode.nodes[i - 1] : ode.domain.a;
      break;
    }
    const auto [j1, j2] = ode.local_jets(i);
    const auto g = j2 / j1;
    out.nodes.push_back(ode.nodes[i]);
    out.g.push_back(g.value());
    out.schwarzian.push_back(schwarzian(g));
  }
  return out;
}

MobiusFit fit_mobius(const std::vector<double>& from, const std::vector<double>& to) {
  if (from.size() != to.size() || from.size() < 4) throw ValidationError("Moebius fit needs at least 4 pairs");
  const auto n = static_cast<Eigen::Index>(from.size());
  const double sx = std::max(1e-300, std::abs(*std::max_element(from.begin(), from.end(), [](double a, double b) {
    return std::abs(a) < std::abs(b);
  })));
  const double sy = std::max(1e-300, std::abs(*std::max_element(to.begin(), to.end(), [](double a, double b) {
    return std::abs(a) < std::abs(b);
  })));
  // Work in scaled variables u = from/sx, v = to/sy: v (c u + d) - (a u + b) = 0.
  Eigen::MatrixXd rows(n, 4);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double u = from[static_cast<std::size_t>(i)] / sx;
    const double v = to[static_cast<std::size_t>(i)] / sy;
    rows.row(i) << -u, -1.0, v * u, v;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows, Eigen::ComputeFullV);
  const Eigen::Vector4d c = svd.matrixV().col(3);
  MobiusFit fit;
  // Undo the scaling: to = sy (a from/sx + b)/(c from/sx + d).
  fit.coefficients = {sy * c[0] / sx, sy * c[1], c[2] / sx, c[3]};
  for (std::size_t i = 0; i < from.size(); ++i) {
    const double u = from[i] / sx;
    const double v = (c[0] * u + c[1]) / (c[2] * u + c[3]);
    fit.max_residual = std::max(fit.max_residual, std::abs(v - to[i] / sy));
  }
  return fit;
}

}  // namespace beamsym
