#pragma once

#include <Eigen/Core>

#include <array>
#include <cmath>
#include <type_traits>

#include "beamsym/errors.hpp"

namespace beamsym {

namespace detail {

constexpr std::array<double, 13> kFactorials = {1.0,     1.0,      2.0,       6.0,        24.0,        120.0,      720.0,
                                                5040.0,  40320.0,  362880.0,  3628800.0,  39916800.0,  479001600.0};

template <typename Scalar>
Scalar factorial(int k) {
  return static_cast<Scalar>(kFactorials[static_cast<std::size_t>(k)]);
}

}  // namespace detail

/// Truncated Taylor expansion of a scalar function of one variable about a point.
///
/// Coefficient k stores f^(k)(x0)/k!, which turns products into Cauchy
/// convolutions and keeps the recurrences for exp/log/pow free of binomials.
/// Order 6 is the working order for beam profiles: the determining functions
/// need g up to its sixth derivative. Lower orders appear where a quantity is
/// itself a derivative of a jet (see `derivative`).
template <typename Scalar, int Order = 6>
class Jet {
  static_assert(Order >= 0 && Order <= 12, "jet order out of supported range");

 public:
  static constexpr int order = Order;
  using Coefficients = Eigen::Array<Scalar, Order + 1, 1>;

  Jet() : c_(Coefficients::Zero()) {}
  explicit Jet(const Coefficients& c) : c_(c) {}

  static Jet constant(Scalar value) {
    Jet j;
    j.c_[0] = value;
    return j;
  }

  /// The identity function x -> x expanded about x0.
  static Jet variable(Scalar x0) {
    Jet j;
    j.c_[0] = x0;
    if constexpr (Order >= 1) j.c_[1] = Scalar(1);
    return j;
  }

  /// Builds a jet from (f, f', f'', ...).
  static Jet from_derivatives(const std::array<Scalar, Order + 1>& d) {
    Jet j;
    for (int k = 0; k <= Order; ++k) j.c_[k] = d[static_cast<std::size_t>(k)] / detail::factorial<Scalar>(k);
    return j;
  }

  Scalar value() const { return c_[0]; }
  Scalar coefficient(int k) const { return c_[k]; }
  Scalar& coefficient(int k) { return c_[k]; }
  /// k-th derivative at the expansion point.
  Scalar derivative(int k) const { return c_[k] * detail::factorial<Scalar>(k); }

  std::array<Scalar, Order + 1> derivatives() const {
    std::array<Scalar, Order + 1> d{};
    for (int k = 0; k <= Order; ++k) d[static_cast<std::size_t>(k)] = derivative(k);
    return d;
  }

  const Coefficients& coefficients() const { return c_; }

  bool is_constant() const { return (c_.tail(Order).abs() == Scalar(0)).all(); }

  Jet operator-() const { return Jet(Coefficients(-c_)); }

  Jet& operator+=(const Jet& o) {
    c_ += o.c_;
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    c_ -= o.c_;
    return *this;
  }
  Jet& operator+=(Scalar s) {
    c_[0] += s;
    return *this;
  }
  Jet& operator-=(Scalar s) {
    c_[0] -= s;
    return *this;
  }
  Jet& operator*=(Scalar s) {
    c_ *= s;
    return *this;
  }
  Jet& operator/=(Scalar s) {
    if (s == Scalar(0)) throw DomainError("division of a jet by zero");
    c_ /= s;
    return *this;
  }
  Jet& operator*=(const Jet& o) {
    *this = *this * o;
    return *this;
  }
  Jet& operator/=(const Jet& o) {
    *this = *this / o;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator+(Jet a, Scalar s) { return a += s; }
  friend Jet operator+(Scalar s, Jet a) { return a += s; }
  friend Jet operator-(Jet a, Scalar s) { return a -= s; }
  friend Jet operator-(Scalar s, const Jet& a) { return (-a) += s; }
  friend Jet operator*(Jet a, Scalar s) { return a *= s; }
  friend Jet operator*(Scalar s, Jet a) { return a *= s; }
  friend Jet operator/(Jet a, Scalar s) { return a /= s; }

  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (int k = 0; k <= Order; ++k) {
      Scalar acc(0);
      for (int i = 0; i <= k; ++i) acc += a.c_[i] * b.c_[k - i];
      r.c_[k] = acc;
    }
    return r;
  }

  friend Jet operator/(const Jet& a, const Jet& b) {
    if (b.c_[0] == Scalar(0)) throw DomainError("division by a jet with zero value");
    Jet q;
    for (int k = 0; k <= Order; ++k) {
      Scalar acc = a.c_[k];
      for (int i = 0; i < k; ++i) acc -= q.c_[i] * b.c_[k - i];
      q.c_[k] = acc / b.c_[0];
    }
    return q;
  }

  friend Jet operator/(Scalar s, const Jet& b) { return constant(s) / b; }

 private:
  Coefficients c_;
};

template <typename T>
struct is_jet : std::false_type {};
template <typename Scalar, int Order>
struct is_jet<Jet<Scalar, Order>> : std::true_type {};
template <typename T>
inline constexpr bool is_jet_v = is_jet<T>::value;

/// Value of a scalar or jet.
template <typename T>
auto primal(const T& v) {
  if constexpr (is_jet_v<T>) {
    return v.value();
  } else {
    return v;
  }
}

template <typename Scalar, int Order>
Jet<Scalar, Order> exp(const Jet<Scalar, Order>& a) {
  using std::exp;
  typename Jet<Scalar, Order>::Coefficients e;
  e[0] = exp(a.coefficient(0));
  for (int k = 1; k <= Order; ++k) {
    Scalar acc(0);
    for (int j = 1; j <= k; ++j) acc += Scalar(j) * a.coefficient(j) * e[k - j];
    e[k] = acc / Scalar(k);
  }
  return Jet<Scalar, Order>(e);
}

template <typename Scalar, int Order>
Jet<Scalar, Order> log(const Jet<Scalar, Order>& a) {
  using std::log;
  const Scalar a0 = a.coefficient(0);
  if (!(a0 > Scalar(0))) throw DomainError("logarithm of a non-positive value");
  typename Jet<Scalar, Order>::Coefficients l;
  l[0] = log(a0);
  for (int k = 1; k <= Order; ++k) {
    Scalar acc = a.coefficient(k);
    for (int j = 1; j < k; ++j) acc -= Scalar(j) * l[j] * a.coefficient(k - j) / Scalar(k);
    l[k] = acc / a0;
  }
  return Jet<Scalar, Order>(l);
}

template <typename Scalar, int Order>
Jet<Scalar, Order> sqrt(const Jet<Scalar, Order>& a) {
  using std::sqrt;
  const Scalar a0 = a.coefficient(0);
  if (!(a0 > Scalar(0))) throw DomainError("square root of a non-positive jet");
  typename Jet<Scalar, Order>::Coefficients s;
  s[0] = sqrt(a0);
  for (int k = 1; k <= Order; ++k) {
    Scalar acc = a.coefficient(k);
    for (int j = 1; j < k; ++j) acc -= s[j] * s[k - j];
    s[k] = acc / (Scalar(2) * s[0]);
  }
  return Jet<Scalar, Order>(s);
}

/// Integer power by binary exponentiation; negative exponents go through one division.
template <typename Scalar, int Order>
Jet<Scalar, Order> pow(const Jet<Scalar, Order>& a, long long n) {
  using J = Jet<Scalar, Order>;
  if (n < 0) return J::constant(Scalar(1)) / pow(a, -n);
  J result = J::constant(Scalar(1));
  J base = a;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

/// Real power u^r. Integer r uses repeated products (valid for any sign of u);
/// otherwise exp(r ln u), which requires u > 0.
template <typename Scalar, int Order>
Jet<Scalar, Order> pow(const Jet<Scalar, Order>& a, Scalar r) {
  using std::floor;
  using std::abs;
  if (r == floor(r) && abs(r) < Scalar(1e9)) return pow(a, static_cast<long long>(r));
  if (!(a.value() > Scalar(0))) throw DomainError("non-integer power of a non-positive base");
  return exp(log(a) * r);
}

template <typename Scalar, int Order>
Jet<Scalar, Order> pow(const Jet<Scalar, Order>& a, const Jet<Scalar, Order>& b) {
  if (b.is_constant()) return pow(a, b.value());
  if (!(a.value() > Scalar(0))) throw DomainError("variable power of a non-positive base");
  return exp(b * log(a));
}

namespace detail {

template <typename Scalar, int Order>
void sin_cos(const Jet<Scalar, Order>& a, Jet<Scalar, Order>& s_out, Jet<Scalar, Order>& c_out) {
  using std::cos;
  using std::sin;
  typename Jet<Scalar, Order>::Coefficients s, c;
  s[0] = sin(a.coefficient(0));
  c[0] = cos(a.coefficient(0));
  for (int k = 1; k <= Order; ++k) {
    Scalar ss(0), cc(0);
    for (int j = 1; j <= k; ++j) {
      ss += Scalar(j) * a.coefficient(j) * c[k - j];
      cc -= Scalar(j) * a.coefficient(j) * s[k - j];
    }
    s[k] = ss / Scalar(k);
    c[k] = cc / Scalar(k);
  }
  s_out = Jet<Scalar, Order>(s);
  c_out = Jet<Scalar, Order>(c);
}

}  // namespace detail

template <typename Scalar, int Order>
Jet<Scalar, Order> sin(const Jet<Scalar, Order>& a) {
  Jet<Scalar, Order> s, c;
  detail::sin_cos(a, s, c);
  return s;
}

template <typename Scalar, int Order>
Jet<Scalar, Order> cos(const Jet<Scalar, Order>& a) {
  Jet<Scalar, Order> s, c;
  detail::sin_cos(a, s, c);
  return c;
}

/// Jet of f' from the jet of f. One order is lost.
template <typename Scalar, int Order>
Jet<Scalar, Order - 1> derivative(const Jet<Scalar, Order>& a) {
  static_assert(Order >= 1);
  typename Jet<Scalar, Order - 1>::Coefficients d;
  for (int k = 0; k < Order; ++k) d[k] = Scalar(k + 1) * a.coefficient(k + 1);
  return Jet<Scalar, Order - 1>(d);
}

template <int Lower, typename Scalar, int Order>
Jet<Scalar, Lower> truncate(const Jet<Scalar, Order>& a) {
  static_assert(Lower <= Order);
  return Jet<Scalar, Lower>(a.coefficients().template head<Lower + 1>());
}

/// Composition outer(inner(s)) where `outer` is expanded about inner.value().
/// Exact to the inner order provided the outer order is at least as high.
template <typename Scalar, int OuterOrder, int InnerOrder>
Jet<Scalar, InnerOrder> compose(const Jet<Scalar, OuterOrder>& outer, const Jet<Scalar, InnerOrder>& inner) {
  static_assert(OuterOrder >= InnerOrder, "outer jet must carry at least the inner order");
  using J = Jet<Scalar, InnerOrder>;
  J delta = inner - inner.value();
  J acc = J::constant(outer.coefficient(InnerOrder));
  for (int k = InnerOrder - 1; k >= 0; --k) acc = acc * delta + outer.coefficient(k);
  return acc;
}

using Jet6 = Jet<double, 6>;

}  // namespace beamsym
