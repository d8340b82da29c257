#pragma once

#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "beamsym/expr.hpp"
#include "beamsym/jet.hpp"
#include "beamsym/term_sum.hpp"

namespace beamsym {

struct Interval {
  double a = 0.0;
  double b = 1.0;

  double length() const { return b - a; }
  bool contains(double x, double slack = 0.0) const { return x >= a - slack && x <= b + slack; }
};

/// Monotone antiderivative g(x) = integral of g' from a, with g(a) = 0.
///
/// Values at Chebyshev-Lobatto nodes are accumulated once; g(x) adds the
/// integral from the nearest node, so every evaluation carries quadrature
/// accuracy rather than interpolation accuracy.
class GFunction {
 public:
  using Derivative = std::function<double(double)>;

  GFunction(Derivative gprime, Interval domain, int nodes = 65);

  double operator()(double x) const;
  double derivative(double x) const { return gprime_(x); }
  /// x with g(x) = value; Newton iteration safeguarded by the node bracket.
  double inverse(double value) const;

  const Interval& domain() const { return domain_; }
  double total() const { return values_.back(); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& values() const { return values_; }

 private:
  Derivative gprime_;
  Interval domain_;
  std::vector<double> nodes_;
  std::vector<double> values_;
};

/// The beam (f, m) on [a, b]. Construction validates positivity of f and m on
/// the probe grid and tabulates g.
class BeamProfile {
 public:
  static constexpr int kProbeNodes = 257;

  BeamProfile(std::string name, Expr f, Expr m, Interval domain);

  const std::string& name() const { return name_; }
  const Expr& f() const { return f_; }
  const Expr& m() const { return m_; }
  const Interval& domain() const { return domain_; }
  const GFunction& g_function() const { return *g_; }

  double f_value(double x) const { return eval_value(f_, x); }
  double m_value(double x) const { return eval_value(m_, x); }
  double g(double x) const { return (*g_)(x); }
  double gprime(double x) const { return g_->derivative(x); }

  template <int Order = 6>
  Jet<double, Order> f_jet(double x) const {
    return eval_jet<Order>(f_, x);
  }
  template <int Order = 6>
  Jet<double, Order> m_jet(double x) const {
    return eval_jet<Order>(m_, x);
  }
  /// g' = (m/f)^(1/4).
  template <int Order = 6>
  Jet<double, Order> gprime_jet(double x) const {
    try {
      return pow(m_jet<Order>(x) / f_jet<Order>(x), 0.25);
    } catch (const DomainError& e) {
      if (e.point()) throw;
      throw DomainError(e.what(), x);
    }
  }
  /// Value from quadrature; derivative k taken from derivative k-1 of g'.
  template <int Order = 6>
  Jet<double, Order> g_jet(double x) const {
    const auto gp = gprime_jet<Order>(x);
    typename Jet<double, Order>::Coefficients c;
    c[0] = g(x);
    for (int k = 1; k <= Order; ++k) c[k] = gp.coefficient(k - 1) / k;
    return Jet<double, Order>(c);
  }

 private:
  std::string name_;
  Expr f_;
  Expr m_;
  Interval domain_;
  std::shared_ptr<const GFunction> g_;
};

/// f, f', g, g', g'' at an abscissa that is either a plain number or a
/// first-order jet (for directional derivatives of point maps).
template <typename T>
struct LocalFields {
  T f, f1, g, g1, g2;
};

template <typename T>
LocalFields<T> local_fields(const BeamProfile& beam, const T& x) {
  if constexpr (is_jet_v<T>) {
    static_assert(T::order == 1, "local fields are provided to first order");
    const double x0 = x.value();
    const auto fj = beam.f_jet<2>(x0);
    const auto gj = beam.g_jet<3>(x0);
    const auto g1 = derivative(gj);
    return {compose(fj, x), compose(derivative(fj), x), compose(gj, x), compose(g1, x),
            compose(derivative(g1), x)};
  } else {
    const auto fj = beam.f_jet<1>(x);
    const auto gj = beam.g_jet<2>(x);
    return {fj.derivative(0), fj.derivative(1), gj.derivative(0), gj.derivative(1), gj.derivative(2)};
  }
}

/// A displacement field sampled at one (t, x): its x-jet to fourth order and u_tt.
struct FieldSample {
  Jet<double, 4> u;
  double u_tt = 0.0;
};

using Field = std::function<FieldSample(double t, double x)>;

/// (f u_xx)_xx + m u_tt = f'' u_xx + 2 f' u_xxx + f u_xxxx + m u_tt, with the
/// absolute magnitudes of those four terms as scale.
TermSum<double> pde_residual(const BeamProfile& beam, const FieldSample& field, double x0);
TermSum<double> pde_residual(const BeamProfile& beam, const Field& field, double t, double x0);

// Beam-spec documents: a JSON object with exactly the keys
// "name" (string), "f" (expression), "m" (expression), "domain" ([a, b]).
BeamProfile load_beam_spec(std::string_view doc);
BeamProfile load_beam_file(const std::filesystem::path& path);
std::string save_beam_spec(const BeamProfile& beam);
void save_beam_file(const BeamProfile& beam, const std::filesystem::path& path);

}  // namespace beamsym
