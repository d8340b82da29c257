#include "beamsym/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "beamsym/ode.hpp"
#include "beamsym/quadrature.hpp"

namespace beamsym {

TermSum<double> d12_residual(const std::array<double, 5>& d) {
  const auto& [f, f1, f2, f3, f4] = d;
  TermSum<double> r;
  r += f4;
  r -= f1 * f3 / f;
  r -= 1.1 * f2 * f2 / f;
  r -= -2.4 * f1 * f1 * f2 / (f * f);
  r -= 0.9 * f1 * f1 * f1 * f1 / (f * f * f);
  return r;
}

double d12_fourth_derivative(double f, double f1, double f2, double f3) {
  if (f == 0.0) throw DomainError("d12 is singular where f = 0");
  return f1 * f3 / f + 1.1 * f2 * f2 / f - 2.4 * f1 * f1 * f2 / (f * f) + 0.9 * f1 * f1 * f1 * f1 / (f * f * f);
}

std::vector<FourJet> integrate_d12(double x0, const std::array<double, 4>& initial, const std::vector<double>& nodes) {
  const OdeRhs rhs = [](double, const Eigen::VectorXd& y) {
    Eigen::VectorXd d(4);
    d << y[1], y[2], y[3], d12_fourth_derivative(y[0], y[1], y[2], y[3]);
    return d;
  };
  Eigen::VectorXd y0(4);
  y0 << initial[0], initial[1], initial[2], initial[3];
  const auto states = integrate_ode(rhs, x0, y0, nodes);
  std::vector<FourJet> out;
  out.reserve(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& s = states[i];
    out.push_back({nodes[i], {s[0], s[1], s[2], s[3], d12_fourth_derivative(s[0], s[1], s[2], s[3])}});
  }
  return out;
}

std::array<double, 5> scale_solution(const std::array<double, 5>& f, double lambda, double mu) {
  std::array<double, 5> out{};
  double p = lambda;
  for (std::size_t k = 0; k < 5; ++k) {
    out[k] = p * f[k];
    p *= mu;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Stage samples

Stage1Sample stage1_sample(const std::array<double, 5>& d) {
  // t = f(x), y = f'(x); d/dt = (1/f') d/dx applied to x-jets.
  const auto tj = Jet<double, 4>::from_derivatives(d);
  const auto tx = derivative(tj);
  if (tx.value() == 0.0) throw DomainError("f' vanishes: t = f is not a coordinate");
  const auto y = tx;
  const auto yd = derivative(y) / truncate<2>(tx);
  const auto ydd = derivative(yd) / truncate<1>(tx);
  const auto yddd = derivative(ydd) / truncate<0>(tx);

  Stage1Sample s;
  s.t = tj.value();
  s.y = y.value();
  s.yd = yd.value();
  s.ydd = ydd.value();
  s.yddd = yddd.value();
  if (s.y == 0.0 || s.t == 0.0) throw DomainError("stage 1 needs t != 0 and y != 0");

  const double t = s.t, Y = s.y, a = s.yd, b = s.ydd;
  s.derived += s.yddd;
  s.derived -= b / t;
  s.derived -= -4.0 * a * b / Y;
  s.derived -= -a * a * a / (Y * Y);
  s.derived -= 2.1 * a * a / (Y * t);
  s.derived -= -2.4 * a / (t * t);
  s.derived -= 0.9 * Y / (t * t * t);

  s.printed += s.yddd;
  s.printed -= b / t;
  s.printed -= -4.0 * a * b / Y;
  s.printed -= -2.4 * a / (t * t);
  s.printed -= 1.05 * a * a / Y;
  s.printed -= -7.0 * a * a * a / (Y * Y);
  s.printed -= 0.9 * Y / (t * t * t);
  return s;
}

Stage2Sample stage2_sample(const Stage1Sample& p) {
  const double y = p.y, a = p.yd / y, b = p.ydd / y, c = p.yddd / y;
  Stage2Sample s;
  s.t = p.t;
  s.z = a;
  s.zd = b - a * a;
  s.zdd = c - 3.0 * a * b + 2.0 * a * a * a;

  const double t = s.t, z = s.z, zd = s.zd;
  s.derived += s.zdd;
  s.derived -= zd / t;
  s.derived -= -7.0 * z * zd;
  s.derived -= 3.1 * z * z / t;
  s.derived -= -6.0 * z * z * z;
  s.derived -= -2.4 * z / (t * t);
  s.derived -= 0.9 / (t * t * t);

  s.printed += s.zdd;
  s.printed -= zd / t;
  s.printed -= -7.0 * z * zd;
  s.printed -= -2.4 * z;
  s.printed -= 2.05 * z * z / t;
  s.printed -= -16.0 * z * z * z;
  s.printed -= 0.9 / (t * t * t);
  return s;
}

double stage3_derived_slope(double u, double v) {
  return 4.0 - 7.0 * u - (((120.0 * u - 202.0) * u + 108.0) * u - 18.0) / (20.0 * v);
}

double stage3_printed_slope(double u, double v) {
  return 5.0 - 7.0 * u - (((320.0 * u - 181.0) * u + 108.0) * u - 18.0) / (20.0 * v);
}

Stage3Sample stage3_sample(const Stage2Sample& p) {
  Stage3Sample s;
  const double t = p.t;
  s.t = t;
  s.u = t * p.z;
  s.v = t * p.z + t * t * p.zd;
  const double dvdt = p.z + 3.0 * t * p.zd + t * t * p.zdd;
  const double dudt = p.z + t * p.zd;
  // v = 0 is a stationary point of u; the relation is then not a graph over u.
  s.equilibrium = std::abs(s.v) <= 1e-10 * (std::abs(s.u) + std::abs(t * t * p.zd) + 1e-300);
  if (s.equilibrium) return s;
  s.dvdu = dvdt / dudt;

  const double u = s.u, v = s.v;
  auto fill = [&](TermSum<double>& r, double c0, double c3, double c2, double c1, double cz) {
    r += s.dvdu;
    r -= c0;
    r -= -7.0 * u;
    r -= -c3 * u * u * u / (20.0 * v);
    r -= -c2 * u * u / (20.0 * v);
    r -= -c1 * u / (20.0 * v);
    r -= -cz / (20.0 * v);
  };
  fill(s.derived, 4.0, 120.0, -202.0, 108.0, -18.0);
  fill(s.printed, 5.0, 320.0, -181.0, 108.0, -18.0);
  return s;
}

// ---------------------------------------------------------------------------
// Stages over trajectories

ReductionState reduce_stage1(std::vector<FourJet> source) {
  if (source.size() < 2) throw ValidationError("reduction needs at least two samples");
  ReductionState st;
  st.stage = 1;
  st.source = std::move(source);
  const double sign = st.source.front().f[1] > 0.0 ? 1.0 : -1.0;
  for (const auto& s : st.source) {
    if (!(sign * s.f[1] > 0.0)) throw DomainError("f' vanishes or changes sign: t = f is not monotone", s.x);
    st.stage1.push_back(stage1_sample(s.f));
  }
  return st;
}

ReductionState reduce_stage1(const Expr& f, Interval domain, int samples, double d12_tol) {
  std::vector<FourJet> source;
  for (double x : chebyshev_nodes(samples, domain.a, domain.b)) {
    const auto j = eval_jet<4>(f, x);
    FourJet fj{x, {j.derivative(0), j.derivative(1), j.derivative(2), j.derivative(3), j.derivative(4)}};
    if (fj.f[1] == 0.0 && fj.f[2] == 0.0) throw DomainError("f' vanishes identically: t = f is degenerate", x);
    const double r = d12_residual(fj.f).normalized();
    if (!(r < d12_tol)) throw ValidationError("f does not solve d12 (normalized residual " + std::to_string(r) + ")");
    source.push_back(fj);
  }
  return reduce_stage1(std::move(source));
}

ReductionState reduce_stage2(ReductionState st) {
  if (st.stage != 1) throw ValidationError("stage 2 consumes a stage-1 state");
  for (const auto& s : st.stage1) {
    if (s.y == 0.0) throw DomainError("y vanishes along the trajectory");
    st.stage2.push_back(stage2_sample(s));
  }
  st.stage = 2;
  return st;
}

ReductionState reduce_stage3(ReductionState st) {
  if (st.stage != 2) throw ValidationError("stage 3 consumes a stage-2 state");
  for (const auto& s : st.stage2) st.stage3.push_back(stage3_sample(s));
  st.stage = 3;
  return st;
}

std::array<double, 4> jet_through(double u, double v, double t, double y) {
  if (t == 0.0 || y == 0.0) throw DomainError("stage variables need t != 0 and y != 0");
  // z = f''/f'^2, zd = (v - u)/t^2, ydd = y (zd + z^2), f''' = ydd y^2 + f''^2/y.
  const double z = u / t;
  const double zd = (v - u) / (t * t);
  const double f2 = z * y * y;
  const double ydd = y * (zd + z * z);
  const double f3 = ydd * y * y + f2 * f2 / y;
  return {t, y, f2, f3};
}

WellDefinedness check_well_definedness(const ReductionState& state, std::uint64_t seed) {
  if (state.stage != 3) throw ValidationError("well-definedness needs a stage-3 state");
  std::mt19937_64 rng(seed);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  WellDefinedness out;
  for (const auto& s : state.stage3) {
    if (s.equilibrium) continue;
    const double t = uniform(0.5, 2.0) * (s.t > 0.0 ? 1.0 : -1.0);
    const double y = uniform(0.5, 2.0);
    const auto j = jet_through(s.u, s.v, t, y);
    const std::array<double, 5> f{j[0], j[1], j[2], j[3], d12_fourth_derivative(j[0], j[1], j[2], j[3])};
    const auto other = stage3_sample(stage2_sample(stage1_sample(f)));
    if (other.equilibrium) continue;
    out.max_difference = std::max(out.max_difference, std::abs(other.dvdu - s.dvdu) / std::max(1.0, std::abs(s.dvdu)));
    ++out.pairs;
  }
  return out;
}

std::vector<FourJet> perturbed_trajectory(const Expr& f, Interval domain, int samples, double perturbation) {
  const double x0 = 0.5 * (domain.a + domain.b);
  const auto j = eval_jet<3>(f, x0);
  const std::array<double, 4> initial{j.derivative(0), j.derivative(1), j.derivative(2),
                                      j.derivative(3) * (1.0 + perturbation)};
  std::vector<double> left, right;
  for (double x : chebyshev_nodes(samples, domain.a, domain.b)) (x < x0 ? left : right).push_back(x);
  std::reverse(left.begin(), left.end());
  auto out = integrate_d12(x0, initial, left);
  std::reverse(out.begin(), out.end());
  const auto r = integrate_d12(x0, initial, right);
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::vector<CoefficientRow> coefficient_comparison() {
  return {
      {1, "ydd/t", 1, 1},
      {1, "yd*ydd/y", -4, -4},
      {1, "yd^3/y^2", -7, -1},
      {1, "yd^2/y", {21, 20}, 0},
      {1, "yd^2/(y*t)", 0, {21, 10}},
      {1, "yd/t^2", {-12, 5}, {-12, 5}},
      {1, "y/t^3", {9, 10}, {9, 10}},
      {2, "zd/t", 1, 1},
      {2, "z*zd", -7, -7},
      {2, "z^2/t", {41, 20}, {31, 10}},
      {2, "z^3", -16, -6},
      {2, "z", {-12, 5}, 0},
      {2, "z/t^2", 0, {-12, 5}},
      {2, "1/t^3", {9, 10}, {9, 10}},
      {3, "1", 5, 4},
      {3, "u", -7, -7},
      {3, "u^3/v", -16, -6},
      {3, "u^2/v", {181, 20}, {101, 10}},
      {3, "u/v", {-27, 5}, {-27, 5}},
      {3, "1/v", {9, 10}, {9, 10}},
  };
}

}  // namespace beamsym
