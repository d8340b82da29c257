#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "beamsym/expr.hpp"
#include "beamsym/gottlieb.hpp"
#include "beamsym/jet.hpp"
#include "beamsym/ode.hpp"
#include "beamsym/quadrature.hpp"
#include "beamsym/rational.hpp"
#include "oracles/jet_values.hpp"

using namespace beamsym;
using J = Jet<double, 6>;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// Centred k-th difference with step h, O(h^2) accurate; odd k uses half steps.
template <typename Fn>
long double central_difference(Fn&& fn, long double x, int k, long double h) {
  long double acc = 0, binom = 1;
  for (int j = 0; j <= k; ++j) {
    acc += ((j % 2) ? -1 : 1) * binom * fn(x + (0.5L * k - j) * h);
    binom = binom * (k - j) / (j + 1);
  }
  return acc / std::pow(h, k);
}

// Two Richardson levels over h, h/2, h/4.
template <typename Fn>
long double extrapolated_derivative(Fn&& fn, long double x, int k, long double h) {
  const long double d1 = central_difference(fn, x, k, h);
  const long double d2 = central_difference(fn, x, k, h / 2);
  const long double d3 = central_difference(fn, x, k, h / 4);
  const long double r1 = (4 * d2 - d1) / 3, r2 = (4 * d3 - d2) / 3;
  return (16 * r2 - r1) / 15;
}

void check_jet(const J& j, const std::array<double, 7>& expected, double tol) {
  for (int k = 0; k <= 6; ++k) {
    CAPTURE(k);
    const double e = expected[static_cast<std::size_t>(k)];
    if (e == 0.0)
      CHECK(std::abs(j.derivative(k)) < tol);
    else
      CHECK(rel(j.derivative(k), e) < tol);
  }
}

J random_jet(std::mt19937_64& rng, double lo = 0.5, double hi = 2.0) {
  std::uniform_real_distribution<double> value(lo, hi), slope(-1.0, 1.0);
  J::Coefficients c;
  c[0] = value(rng);
  for (int k = 1; k <= 6; ++k) c[k] = slope(rng);
  return J(c);
}

}  // namespace

TEST_CASE("rationals stay reduced with a positive denominator") {
  const Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(3, 4) / Rational(3, 8)) == Rational(2));
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ValidationError);
}

TEST_CASE("exponent polynomial values and roots are exact") {
  std::vector<Rational> coeffs;
  for (auto c : exponent_polynomial()) coeffs.emplace_back(c);
  // 4 (27/8) - 32 (9/4) + 79 (3/2) - 60 = 0
  CHECK(evaluate_polynomial(coeffs, Rational(3, 2)) == Rational(0));
  // 1 * (4 - 32 + 79 - 60)
  CHECK(evaluate_polynomial(coeffs, Rational(1)) == Rational(-9));
  const std::vector<Rational> expected{0, Rational(3, 2), Rational(5, 2), 4};
  CHECK(exponent_roots() == expected);
  CHECK(rational_roots({-6, 11, -6, 1}) == std::vector<Rational>{1, 2, 3});
  CHECK(rational_roots({1, 0, 1}).empty());
  CHECK(rational_roots({0, 0, 1}) == std::vector<Rational>{0, 0});
}

TEST_CASE("jet arithmetic on elementary cases") {
  const J x2 = J::variable(2.0);
  check_jet(x2 * x2, {4, 4, 2, 0, 0, 0, 0}, 1e-15);

  std::mt19937_64 rng(7);
  const J j = random_jet(rng);
  check_jet(j / j, {1, 0, 0, 0, 0, 0, 0}, 1e-14);
  check_jet(exp(J::variable(0.0)), {1, 1, 1, 1, 1, 1, 1}, 1e-15);
  check_jet(pow(J::variable(0.0) + 1.0, 1.5), oracle::kPow32At0, 1e-13);

  const J p = pow(j, 1.0);
  for (int k = 0; k <= 6; ++k) CHECK(p.coefficient(k) == doctest::Approx(j.coefficient(k)).epsilon(1e-15));

  const J id = J::variable(0.3);
  CHECK(id.value() == 0.3);
  CHECK(id.derivative(1) == 1.0);
  for (int k = 2; k <= 6; ++k) CHECK(id.derivative(k) == 0.0);
}

TEST_CASE("jet product matches finite differences and the symbolic oracle") {
  const J x0 = J::variable(0.0);
  const J prod = exp(x0) * log(x0 + 1.0);
  check_jet(prod, oracle::kExpLogAt0, 1e-13);

  auto fn = [](long double x) { return std::exp(x) * std::log1p(x); };
  for (int k = 1; k <= 6; ++k) {
    CAPTURE(k);
    const long double fd = extrapolated_derivative(fn, 0.0L, k, 0.05L);
    const double exact = oracle::kExpLogAt0[static_cast<std::size_t>(k)];
    if (exact == 0.0)
      CHECK(std::abs(static_cast<double>(fd)) < 1e-5);
    else
      CHECK(rel(static_cast<double>(fd), exact) < 1e-5);
  }
}

TEST_CASE("jet products obey Leibniz and exp(ln a) = a") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const J a = random_jet(rng), b = random_jet(rng);
    const J ab = a * b;
    for (int n = 0; n <= 6; ++n) {
      double leibniz = 0.0, scale = 0.0, binom = 1.0;
      for (int k = 0; k <= n; ++k) {
        const double term = binom * a.derivative(k) * b.derivative(n - k);
        leibniz += term;
        scale += std::abs(term);
        binom = binom * (n - k) / (k + 1);
      }
      CHECK(std::abs(ab.derivative(n) - leibniz) <= 1e-13 * scale);
    }
    const J back = exp(log(a));
    for (int k = 0; k <= 6; ++k) CHECK(std::abs(back.derivative(k) - a.derivative(k)) <= 1e-12 * (1 + std::abs(a.derivative(k))));
  }
}

TEST_CASE("jet domain errors") {
  CHECK_THROWS_AS(J::variable(0.0) / J::variable(0.0), DomainError);
  CHECK_THROWS_AS(log(J::variable(-1.0)), DomainError);
  CHECK_THROWS_AS(pow(J::variable(-1.0), 0.5), DomainError);
  // Integer powers are valid for any sign.
  CHECK(pow(J::variable(-2.0), 3.0).value() == -8.0);
  try {
    eval_jet(parse_expr("ln(x - 1)"), 0.5);
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    REQUIRE(e.point().has_value());
    CHECK(*e.point() == 0.5);
  }
}

TEST_CASE("parser precedence and grouping") {
  const Expr e = parse_expr("2*x^4");
  const auto* mul = std::get_if<BinaryNode>(&e.node().v);
  REQUIRE(mul);
  CHECK(mul->op == BinaryOp::mul);
  CHECK(std::holds_alternative<NumberNode>(mul->lhs.node().v));
  const auto* pw = std::get_if<BinaryNode>(&mul->rhs.node().v);
  REQUIRE(pw);
  CHECK(pw->op == BinaryOp::pow);

  const Expr g = parse_expr("x^(3/2)");
  const auto* gp = std::get_if<BinaryNode>(&g.node().v);
  REQUIRE(gp);
  CHECK(gp->op == BinaryOp::pow);
  const auto* div = std::get_if<BinaryNode>(&gp->rhs.node().v);
  REQUIRE(div);
  CHECK(div->op == BinaryOp::div);

  CHECK(eval_value(parse_expr("2^3^2"), 0.0) == 512.0);  // right-associative
  CHECK(eval_value(parse_expr("-x^2"), 3.0) == -9.0);    // minus binds looser than ^
  CHECK(eval_value(parse_expr("2^-1"), 0.0) == 0.5);
  CHECK(eval_value(parse_expr("1 - 2 - 3"), 0.0) == -4.0);
  CHECK(eval_value(parse_expr("12/3/2"), 0.0) == 2.0);
  CHECK(eval_value(parse_expr("1.5e1 + .5"), 0.0) == 15.5);
}

TEST_CASE("parse errors carry a kind and an offset within the input") {
  struct Case {
    const char* src;
    ParseErrorKind kind;
    std::size_t offset;
  };
  // Offsets are zero-based; errors found at end of input report the input length.
  const Case cases[] = {
      {"exp(x", ParseErrorKind::unbalanced_parenthesis, 5},
      {"(x + 1", ParseErrorKind::unbalanced_parenthesis, 6},
      {"x + 1)", ParseErrorKind::unbalanced_parenthesis, 5},
      {"2 $ x", ParseErrorKind::lexical, 2},
      {"foo(x)", ParseErrorKind::unknown_identifier, 0},
      {"x +", ParseErrorKind::unexpected_token, 3},
      {"", ParseErrorKind::unexpected_token, 0},
  };
  for (const auto& c : cases) {
    CAPTURE(c.src);
    try {
      parse_expr(c.src);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.kind() == c.kind);
      CHECK(e.offset() == c.offset);
      CHECK(e.offset() <= std::string(c.src).size());
    }
  }
}

namespace {

// Random strings from the grammar, built top-down with bounded depth.
std::string random_expr(std::mt19937_64& rng, int depth) {
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  if (depth == 0 || pick(4) == 0) {
    switch (pick(3)) {
      case 0:
        return "x";
      case 1:
        return std::to_string(pick(9) + 1);
      default:
        return std::to_string(pick(90) + 10) + "." + std::to_string(pick(10));
    }
  }
  static const char* fns[] = {"exp", "ln", "sqrt", "sin", "cos"};
  static const char* ops[] = {" + ", " - ", "*", "/", "^"};
  switch (pick(4)) {
    case 0:
      return std::string(fns[pick(5)]) + "(" + random_expr(rng, depth - 1) + ")";
    case 1:
      return "-" + random_expr(rng, depth - 1);
    case 2:
      return "(" + random_expr(rng, depth - 1) + ")";
    default:
      return random_expr(rng, depth - 1) + ops[pick(5)] + random_expr(rng, depth - 1);
  }
}

}  // namespace

TEST_CASE("every grammar string parses and unparse round-trips structurally") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 500; ++i) {
    const std::string src = random_expr(rng, 4);
    CAPTURE(src);
    const Expr e = parse_expr(src);
    const std::string text = unparse(e);
    CAPTURE(text);
    CHECK(parse_expr(text) == e);
    CHECK(unparse(parse_expr(text)) == text);
  }
  for (const char* src : {"-x^2", "(-x)^2", "2^3^2", "(2^3)^2", "1 - (2 - x)", "x/(2*x)", "-(x + 1)", "--x"}) {
    CAPTURE(src);
    CHECK(parse_expr(unparse(parse_expr(src))) == parse_expr(src));
  }
}

TEST_CASE("evaluation agrees with an independent interpreter") {
  const Expr e = parse_expr("sqrt(2 + sin(x))/(1 + x^2) + cos(3*x)*exp(-x/2) - ln(1 + x)^2");
  auto direct = [](double x) {
    return std::sqrt(2 + std::sin(x)) / (1 + x * x) + std::cos(3 * x) * std::exp(-x / 2) - std::pow(std::log(1 + x), 2);
  };
  for (double x : {0.1, 0.7, 1.3, 2.9}) {
    CAPTURE(x);
    CHECK(rel(eval_value(e, x), direct(x)) < 1e-14);
    CHECK(rel(eval_jet(e, x).value(), direct(x)) < 1e-14);
  }
}

TEST_CASE("eval_jet of closed forms") {
  check_jet(eval_jet(parse_expr("x^2"), 2.0), {4, 4, 2, 0, 0, 0, 0}, 1e-15);
  const double e = std::numbers::e;
  check_jet(eval_jet(parse_expr("exp(x)"), 1.0), {e, e, e, e, e, e, e}, 1e-15);
  check_jet(eval_jet(parse_expr("(1+x)^(5/2)"), 1.0), oracle::kPow52At1, 1e-13);
  check_jet(eval_jet(parse_expr("sqrt(2 + sin(x))/(1 + x^2) + cos(3*x)*exp(-x/2)"), 0.7), oracle::kMixedAt07, 1e-12);
}

TEST_CASE("Gauss-Legendre rules and adaptive quadrature") {
  const auto rule = gauss_legendre(10);
  double s = 0.0, w = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    s += rule.weights[i] * std::pow(rule.nodes[i], 18);
    w += rule.weights[i];
  }
  CHECK(w == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(rel(s, 2.0 / 19.0) < 1e-14);

  CHECK(rel(integrate([](double x) { return std::exp(x); }, 0.0, 1.0), std::numbers::e - 1.0) < 1e-14);
  CHECK(rel(integrate([](double x) { return 1.0 / x; }, 1.0, 2.0), std::numbers::ln2) < 1e-13);
  // Endpoint behaviour like sqrt needs bisection to converge.
  CHECK(rel(integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-12), 2.0 / 3.0) < 1e-11);

  const auto nodes = chebyshev_nodes(9, 1.0, 2.0);
  REQUIRE(nodes.size() == 9);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    CHECK(nodes[i] > 1.0);
    CHECK(nodes[i] < 2.0);
    if (i) CHECK(nodes[i] > nodes[i - 1]);
  }
  const auto lobatto = chebyshev_lobatto_nodes(5, 1.0, 2.0);
  CHECK(lobatto.front() == 1.0);
  CHECK(lobatto.back() == 2.0);
}

TEST_CASE("Dormand-Prince integration forwards and backwards") {
  const OdeRhs decay = [](double, const Eigen::VectorXd& y) { return Eigen::VectorXd(y); };
  Eigen::VectorXd y0(1);
  y0 << 1.0;
  const auto fwd = integrate_ode(decay, 0.0, y0, {0.5, 1.0});
  CHECK(rel(fwd[1][0], std::numbers::e) < 1e-10);
  const auto bwd = integrate_ode(decay, 0.0, y0, {-1.0});
  CHECK(rel(bwd[0][0], 1.0 / std::numbers::e) < 1e-10);

  const OdeRhs oscillator = [](double, const Eigen::VectorXd& y) {
    Eigen::VectorXd d(2);
    d << y[1], -y[0];
    return d;
  };
  Eigen::VectorXd s0(2);
  s0 << 0.0, 1.0;
  const auto out = integrate_ode(oscillator, 0.0, s0, {std::numbers::pi / 2, 10.0});
  CHECK(std::abs(out[0][0] - 1.0) < 1e-10);
  CHECK(std::abs(out[1][0] - std::sin(10.0)) < 1e-10);
  CHECK(std::abs(out[1][1] - std::cos(10.0)) < 1e-10);
}
