#pragma once

#include <Eigen/Core>

#include <functional>
#include <vector>

namespace beamsym {

struct OdeOptions {
  double rtol = 1e-12;
  double atol = 1e-14;
  double initial_step = 1e-3;
  double min_step = 1e-14;  // relative to the span
  long max_steps = 2'000'000;
};

using OdeRhs = std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)>;

/// Dormand-Prince 5(4) with PI step control. Returns the state at every entry of
/// `outputs` (monotone, starting at or after x0 in the integration direction);
/// steps are clipped to land on each output abscissa exactly.
/// Throws ConvergenceError when the step size collapses.
std::vector<Eigen::VectorXd> integrate_ode(const OdeRhs& rhs, double x0, const Eigen::VectorXd& y0,
                                           const std::vector<double>& outputs, const OdeOptions& opt = {});

}  // namespace beamsym
