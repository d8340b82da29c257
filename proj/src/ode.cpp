#include "beamsym/ode.hpp"

#include <algorithm>
#include <cmath>

#include "beamsym/errors.hpp"

namespace beamsym {

namespace {

constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

}  // namespace

std::vector<Eigen::VectorXd> integrate_ode(const OdeRhs& rhs, double x0, const Eigen::VectorXd& y0,
                                           const std::vector<double>& outputs, const OdeOptions& opt) {
  std::vector<Eigen::VectorXd> result;
  result.reserve(outputs.size());
  if (outputs.empty()) return result;

  const double span = std::abs(outputs.back() - x0);
  const double dir = outputs.back() >= x0 ? 1.0 : -1.0;
  double x = x0;
  Eigen::VectorXd y = y0;
  Eigen::VectorXd k1 = rhs(x, y);
  double h = std::min(opt.initial_step * std::max(span, 1.0), std::max(span, 1e-300));
  double err_prev = 1e-4;
  long steps = 0;

  for (double target : outputs) {
    if ((target - x) * dir < 0.0) throw ValidationError("ODE output abscissae must be monotone");
    while ((target - x) * dir > 0.0) {
      if (++steps > opt.max_steps) throw ConvergenceError("ODE integration exceeded its step budget");
      bool clipped = false;
      double step = h;
      if (step >= std::abs(target - x)) {
        step = std::abs(target - x);
        clipped = true;
      }
      const double hs = dir * step;
      const Eigen::VectorXd k2 = rhs(x + c2 * hs, y + hs * (a21 * k1));
      const Eigen::VectorXd k3 = rhs(x + c3 * hs, y + hs * (a31 * k1 + a32 * k2));
      const Eigen::VectorXd k4 = rhs(x + c4 * hs, y + hs * (a41 * k1 + a42 * k2 + a43 * k3));
      const Eigen::VectorXd k5 = rhs(x + c5 * hs, y + hs * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
      const Eigen::VectorXd k6 =
          rhs(x + hs, y + hs * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
      const Eigen::VectorXd y_next = y + hs * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
      const Eigen::VectorXd k7 = rhs(x + hs, y_next);
      const Eigen::VectorXd err_vec = hs * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

      const Eigen::ArrayXd sc = opt.atol + opt.rtol * y.array().abs().max(y_next.array().abs());
      const double err = std::sqrt((err_vec.array() / sc).square().mean());

      if (std::isfinite(err) && err <= 1.0) {
        x = clipped ? target : x + hs;
        y = y_next;
        k1 = k7;
        double factor = 0.9 * std::pow(std::max(err, 1e-10), -0.7 / 5) * std::pow(err_prev, 0.4 / 5);
        factor = std::clamp(factor, 0.2, 5.0);
        err_prev = std::max(err, 1e-4);
        if (!clipped || factor < 1.0) h = step * factor;
      } else {
        const double factor = std::isfinite(err) ? std::max(0.2, 0.9 * std::pow(err, -0.2)) : 0.1;
        h = step * factor;
      }
      if (h < opt.min_step * std::max(span, 1.0))
        throw ConvergenceError("ODE step size collapsed near x = " + std::to_string(x));
    }
    result.push_back(y);
  }
  return result;
}

}  // namespace beamsym
