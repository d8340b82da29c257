#include <doctest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "beamsym/gottlieb.hpp"
#include "beamsym/quadrature.hpp"
#include "beamsym/reduction.hpp"
#include "beamsym/symmetry.hpp"

using namespace beamsym;

namespace {

GottliebParams params(Rational m, double L, double M, double P, double Q) {
  GottliebParams p;
  p.exponent = m;
  p.L = L;
  p.M = M;
  p.P = P;
  p.Q = Q;
  return p;
}

std::string number_text(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<Rational> exponent_coefficients() {
  std::vector<Rational> c;
  for (auto k : exponent_polynomial()) c.emplace_back(k);
  return c;
}

// Class one: all four determining functions vanish, and with them every reduced
// constraint. The printed R3 variant is not a constraint and is skipped.
void check_class1(const Classification& cls) {
  CHECK(cls.label == SymmetryLabel::class1);
  CHECK(cls.class1_residual < 1e-9);
  for (std::size_t i = 0; i < cls.r_max.size(); ++i)
    if (kReducedResidualNames[i] != "R3_printed") CHECK(cls.r_max[i] < 1e-8);
}

}  // namespace

TEST_CASE("exponent polynomial and its rational roots") {
  const auto roots = exponent_roots();
  REQUIRE(roots.size() == 4);
  CHECK(roots[0] == Rational(0));
  CHECK(roots[1] == Rational(3, 2));
  CHECK(roots[2] == Rational(5, 2));
  CHECK(roots[3] == Rational(4));
  for (const auto& r : roots) CHECK(evaluate_polynomial(exponent_coefficients(), r) == Rational(0));
}

TEST_CASE("closed-form families") {
  // m = 4 with g = s: f = K s^4 and m_density = K A^4 s^4.
  GottliebParams p = params(Rational(4), 0.0, 1.0, 1.0, 0.0);
  p.K = 2.0;
  p.A = 1.5;
  p.B = 0.5;
  const auto quartic = make_gottlieb(p);
  for (double x : {0.0, 0.3, 1.0}) {
    const double s = 1.5 * x + 0.5;
    CHECK(quartic.f_value(x) == doctest::Approx(2.0 * std::pow(s, 4)).epsilon(1e-14));
    CHECK(quartic.m_value(x) == doctest::Approx(2.0 * std::pow(1.5, 4) * std::pow(s, 4)).epsilon(1e-13));
  }
  CHECK(eval_value(gottlieb_g(p), 0.2) == doctest::Approx(0.8).epsilon(1e-15));

  // m = 0 with g = x + B: the uniform beam.
  const auto flat = make_gottlieb(params(Rational(0), 0.0, 1.0, 1.0, 0.0));
  CHECK(flat.f_value(0.4) == 1.0);
  CHECK(flat.m_value(0.4) == doctest::Approx(1.0).epsilon(1e-15));

  const auto three_halves = make_gottlieb(params(Rational(3, 2), 1.0, 1.0, 1.0, 2.0));
  check_class1(classify(three_halves));
  // Density matches g'^4 f from the closed-form g.
  const Expr g = gottlieb_g(params(Rational(3, 2), 1.0, 1.0, 1.0, 2.0));
  for (double x : {0.1, 0.6, 0.9}) {
    const double gp = eval_jet<1>(g, x).derivative(1);
    CHECK(three_halves.m_value(x) == doctest::Approx(std::pow(gp, 4) * three_halves.f_value(x)).epsilon(1e-13));
  }

  CHECK_THROWS_AS(make_gottlieb(params(Rational(1), 0, 1, 1, 0)), ValidationError);
  CHECK_THROWS_AS(make_gottlieb(params(Rational(4), 1, 2, 1, 2)), ValidationError);  // LQ - MP = 0
  CHECK_THROWS_AS(make_gottlieb(params(Rational(4), 0, 1, 1, -1)), ValidationError);  // pole inside
  GottliebParams neg = params(Rational(4), 0, 1, 1, 0);
  neg.B = -0.5;
  CHECK_THROWS_AS(make_gottlieb(neg), ValidationError);
}

TEST_CASE("Schwarzian derivative") {
  using J = Jet<double, 3>;
  const auto x = J::variable(0.7);
  CHECK(schwarzian(3.0 * x + 2.0) == 0.0);
  CHECK(std::abs(schwarzian((2.0 * x + 1.0) / (x + 3.0))) < 1e-14);
  CHECK(schwarzian(log(J::variable(2.0))) == doctest::Approx(0.125).epsilon(1e-14));
  CHECK_THROWS_AS(schwarzian(J::constant(1.0)), DomainError);
}

TEST_CASE("normal-form ODE") {
  const auto nodes = chebyshev_lobatto_nodes(33, 0.0, 1.0);

  const auto uniform = solve_normal_ode(parse_expr("1"), {0.0, 1.0}, nodes);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    CHECK(std::abs(uniform.y1[i] - 1.0) < 1e-12);
    CHECK(std::abs(uniform.y2[i] - nodes[i]) < 1e-12);
  }

  // f = (Ax+B)^m: q = A^2 m(4-m)/(20 s^2), so s^(1/4) and s^(3/4) solve it for m = 3/2.
  const double A = 1.5, B = 0.5;
  const Expr f = parse_expr("(1.5*x + 0.5)^(3/2)");
  for (double x : {0.0, 0.4, 1.0}) {
    const double s = A * x + B;
    CHECK(normal_form_potential(f, x) == doctest::Approx(A * A * 1.5 * 2.5 / (20 * s * s)).epsilon(1e-13));
  }
  InitialConditions init;
  init.y1 = std::pow(B, 0.25);
  init.dy1 = 0.25 * A * std::pow(B, -0.75);
  init.y2 = std::pow(B, 0.75);
  init.dy2 = 0.75 * A * std::pow(B, -0.25);
  const double w0 = init.y1 * init.dy2 - init.y2 * init.dy1;
  const auto ode = solve_normal_ode(f, {0.0, 1.0}, nodes, init);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double s = A * nodes[i] + B;
    CHECK(std::abs(ode.y1[i] - std::pow(s, 0.25)) < 1e-9);
    CHECK(std::abs(ode.y2[i] * w0 - std::pow(s, 0.75)) < 1e-9);
    CHECK(std::abs(ode.wronskian(i) - 1.0) < 1e-9);
  }

  const auto wavy = solve_normal_ode(parse_expr("2 + sin(3*x)"), {0.0, 2.0}, chebyshev_lobatto_nodes(33, 0.0, 2.0));
  for (std::size_t i = 0; i < wavy.nodes.size(); ++i) CHECK(std::abs(wavy.wronskian(i) - 1.0) < 1e-9);

  CHECK_THROWS_AS(solve_normal_ode(f, {0.0, 1.0}, {0.5, 0.2}), ValidationError);
  CHECK_THROWS_AS(solve_normal_ode(f, {0.0, 1.0}, nodes, InitialConditions{1, 0, 2, 0}), ValidationError);
}

TEST_CASE("g from solution ratios") {
  // Schwarzian of y2/y1 equals 2q at every node.
  const Expr f = parse_expr("(1 + x^2)*exp(x/2)");
  const auto ode = solve_normal_ode(f, {0.0, 1.0}, chebyshev_lobatto_nodes(33, 0.0, 1.0));
  const auto gs = g_from_solutions(ode);
  REQUIRE(gs.nodes.size() == 33);
  for (std::size_t i = 0; i < gs.nodes.size(); ++i)
    CHECK(std::abs(gs.schwarzian[i] - 2.0 * normal_form_potential(f, gs.nodes[i])) < 1e-8);

  // A different basis changes g by a Moebius map only.
  const auto other = g_from_solutions(solve_normal_ode(f, {0.0, 1.0}, ode.nodes, InitialConditions{1.0, 0.5, 0.3, 1.0}));
  const auto fit = fit_mobius(gs.g, other.g);
  CHECK(fit.max_residual < 1e-10);

  // A non-Moebius pair is not fitted.
  std::vector<double> sq;
  for (double v : gs.g) sq.push_back(v * v * v);
  CHECK(fit_mobius(gs.g, sq).max_residual > 1e-4);
}

TEST_CASE("random family members have the uniform beam's algebra") {
  std::mt19937_64 rng(2718);
  std::uniform_real_distribution<double> pos(0.5, 2.0), any(-2.0, 2.0);
  for (const auto& m : exponent_roots()) {
    int made = 0;
    while (made < 20) {
      GottliebParams p = params(m, any(rng), any(rng), pos(rng), pos(rng));
      p.K = pos(rng);
      p.A = pos(rng);
      p.B = pos(rng);
      if (std::abs(p.L * p.Q - p.M * p.P) < 0.2) continue;
      check_class1(classify(make_gottlieb(p)));
      ++made;
    }
  }
}

TEST_CASE("only the four roots admit a Moebius g") {
  // Scan m on a quarter grid with both ansatz shapes g(s) and g(sqrt s).
  for (int k = 0; k <= 16; ++k) {
    const Rational m(k, 4);
    const std::string f = "(1 + x)^(" + number_text(k / 4.0) + ")";
    const std::string linear_g = "1/(1 + 2*(1 + x))^2";
    const std::string sqrt_g = "1/(2*sqrt(1 + x)*(1 + 2*sqrt(1 + x))^2)";
    bool found = false;
    for (const auto& gp : {linear_g, sqrt_g}) {
      const BeamProfile b("scan", parse_expr(f), parse_expr(f + "*(" + gp + ")^4"), {0.0, 1.0});
      found = found || classify(b).label == SymmetryLabel::class1;
    }
    const bool root = evaluate_polynomial(exponent_coefficients(), m) == Rational(0);
    CAPTURE(k);
    CHECK(found == root);
  }
}

TEST_CASE("exponential rigidity fails the fourth-order condition") {
  // f = C e^(Dx): f^(k) = D^k f, and the residual is 2/5 D^4 f.
  for (double D : {0.5, -1.0, 2.0}) {
    const double f = 1.7;
    const std::array<double, 5> jet{f, D * f, D * D * f, D * D * D * f, D * D * D * D * f};
    const auto r = d12_residual(jet);
    CHECK(r.value == doctest::Approx(0.4 * std::pow(D, 4) * f).epsilon(1e-13));
    // Term magnitudes sum to (1 + 1 + 11/10 + 12/5 + 9/10) D^4 f.
    CHECK(r.normalized() == doctest::Approx(1.0 / 16.0).epsilon(1e-13));
  }
  const std::array<double, 5> flat{1.7, 0, 0, 0, 0};
  CHECK(d12_residual(flat).value == 0.0);
}
