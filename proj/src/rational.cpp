#include "beamsym/rational.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "beamsym/errors.hpp"

namespace beamsym {

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n, d);
  num_ = g == 0 ? 0 : n / g;
  den_ = g == 0 ? 1 : d / g;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw DomainError("rational division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last)
    throw ValidationError("not a rational number: '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return {parse_int(text, text)};
  return {parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text)};
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational evaluate_polynomial(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

std::vector<std::int64_t> divisors(std::int64_t n) {
  n = std::llabs(n);
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

// Divides p(x) by (x - r) assuming r is a root; coefficients stay rational.
std::vector<Rational> deflate(const std::vector<Rational>& p, const Rational& r) {
  const std::size_t n = p.size() - 1;
  std::vector<Rational> q(n);
  Rational carry(0);
  for (std::size_t k = n; k-- > 0;) {
    carry = p[k + 1] + carry * r;
    q[k] = carry;
  }
  return q;
}

}  // namespace

std::vector<Rational> rational_roots(std::vector<std::int64_t> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.size() < 2) return {};

  std::vector<Rational> roots;
  std::size_t zeros = 0;
  while (zeros < coeffs.size() && coeffs[zeros] == 0) ++zeros;
  for (std::size_t i = 0; i < zeros; ++i) roots.emplace_back(0);
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(zeros));

  std::vector<Rational> poly(coeffs.begin(), coeffs.end());
  std::vector<Rational> candidates;
  for (std::int64_t p : divisors(coeffs.front()))
    for (std::int64_t q : divisors(coeffs.back())) {
      candidates.emplace_back(p, q);
      candidates.emplace_back(-p, q);
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  for (const Rational& c : candidates) {
    while (poly.size() > 1 && evaluate_polynomial(poly, c) == Rational(0)) {
      roots.push_back(c);
      poly = deflate(poly, c);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace beamsym
