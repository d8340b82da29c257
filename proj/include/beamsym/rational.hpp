#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

namespace beamsym {

/// Exact rational number with 64-bit numerator and denominator, always reduced
/// and with a positive denominator. Overflow is not checked; the values this
/// library manipulates (polynomial coefficients, exponents) stay tiny.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit from integers is intended
  Rational(std::int64_t n, std::int64_t d);

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool is_integer() const { return den_ == 1; }
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator*(const Rational& a, const Rational& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return {-num_, den_}; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Evaluates sum_k coeffs[k] x^k exactly.
Rational evaluate_polynomial(const std::vector<Rational>& coeffs, const Rational& x);

/// All rational roots of an integer-coefficient polynomial (coeffs[k] multiplies x^k),
/// with multiplicity, sorted ascending. Found by the rational root theorem and
/// exact synthetic division.
std::vector<Rational> rational_roots(std::vector<std::int64_t> coeffs);

}  // namespace beamsym
