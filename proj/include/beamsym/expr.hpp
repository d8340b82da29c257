#pragma once

#include <cmath>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "beamsym/errors.hpp"
#include "beamsym/jet.hpp"

namespace beamsym {

enum class BinaryOp { add, sub, mul, div, pow };
enum class Function { exp, ln, sqrt, sin, cos };

struct ExprNode;

/// Immutable expression tree in the single variable x. Cheap to copy: subtrees are shared.
///
/// Grammar accepted by `parse_expr`:
///
///     expr   := term (("+"|"-") term)*
///     term   := unary (("*"|"/") unary)*
///     unary  := "-" unary | factor
///     factor := base ("^" unary)?
///     base   := NUMBER | "x" | IDENT "(" expr ")" | "(" expr ")"
///     IDENT  := exp | ln | sqrt | sin | cos
class Expr {
 public:
  Expr();  // the literal 0
  explicit Expr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}

  const ExprNode& node() const { return *node_; }

  /// True when the tree does not reference x.
  bool is_constant() const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  std::shared_ptr<const ExprNode> node_;
};

struct NumberNode {
  double value;  // always finite and non-negative; negatives are Negate(Number)
};
struct VariableNode {};
struct NegateNode {
  Expr operand;
};
struct BinaryNode {
  BinaryOp op;
  Expr lhs;
  Expr rhs;
};
struct CallNode {
  Function fn;
  Expr arg;
};

struct ExprNode {
  std::variant<NumberNode, VariableNode, NegateNode, BinaryNode, CallNode> v;
};

// Builders. `number` of a negative value yields Negate(Number(|v|)) so that every
// tree the builders produce is one the parser could also produce.
Expr number(double value);
Expr variable();
Expr operator-(const Expr& a);
Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr pow(const Expr& base, const Expr& exponent);
Expr call(Function fn, const Expr& arg);

Expr parse_expr(std::string_view src);
std::string unparse(const Expr& e);
std::string_view function_name(Function fn);

namespace detail {

inline double checked_log(double v) {
  if (!(v > 0.0)) throw DomainError("logarithm of a non-positive value");
  return std::log(v);
}
inline double checked_sqrt(double v) {
  if (v < 0.0) throw DomainError("square root of a negative value");
  return std::sqrt(v);
}
inline double checked_div(double a, double b) {
  if (b == 0.0) throw DomainError("division by zero");
  return a / b;
}
inline double checked_pow(double b, double e) {
  if (b < 0.0 && e != std::floor(e)) throw DomainError("non-integer power of a negative base");
  if (b == 0.0 && e < 0.0) throw DomainError("negative power of zero");
  return std::pow(b, e);
}

template <typename Scalar, int Order>
Jet<Scalar, Order> checked_log(const Jet<Scalar, Order>& v) {
  return log(v);
}
template <typename Scalar, int Order>
Jet<Scalar, Order> checked_sqrt(const Jet<Scalar, Order>& v) {
  return sqrt(v);
}
template <typename Scalar, int Order>
Jet<Scalar, Order> checked_div(const Jet<Scalar, Order>& a, const Jet<Scalar, Order>& b) {
  return a / b;
}

template <typename T>
T evaluate_node(const Expr& e, const T& x);

template <typename T>
T constant_of(double v) {
  if constexpr (is_jet_v<T>) {
    return T::constant(v);
  } else {
    return static_cast<T>(v);
  }
}

template <typename T>
T power(const Expr& base, const Expr& exponent, const T& x) {
  const T b = evaluate_node(base, x);
  if (exponent.is_constant()) {
    const double r = evaluate_node<double>(exponent, 0.0);
    if constexpr (is_jet_v<T>) {
      return pow(b, static_cast<typename T::Coefficients::Scalar>(r));
    } else {
      return checked_pow(b, r);
    }
  }
  const T e = evaluate_node(exponent, x);
  if constexpr (is_jet_v<T>) {
    return pow(b, e);
  } else {
    return checked_pow(b, e);
  }
}

template <typename T>
T evaluate_node(const Expr& e, const T& x) {
  using std::cos;
  using std::exp;
  using std::sin;
  return std::visit(
      [&](const auto& n) -> T {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, NumberNode>) {
          return constant_of<T>(n.value);
        } else if constexpr (std::is_same_v<N, VariableNode>) {
          return x;
        } else if constexpr (std::is_same_v<N, NegateNode>) {
          return -evaluate_node(n.operand, x);
        } else if constexpr (std::is_same_v<N, BinaryNode>) {
          switch (n.op) {
            case BinaryOp::add:
              return evaluate_node(n.lhs, x) + evaluate_node(n.rhs, x);
            case BinaryOp::sub:
              return evaluate_node(n.lhs, x) - evaluate_node(n.rhs, x);
            case BinaryOp::mul:
              return evaluate_node(n.lhs, x) * evaluate_node(n.rhs, x);
            case BinaryOp::div:
              return checked_div(evaluate_node(n.lhs, x), evaluate_node(n.rhs, x));
            case BinaryOp::pow:
              return power(n.lhs, n.rhs, x);
          }
          throw ValidationError("corrupt expression node");
        } else {
          const T a = evaluate_node(n.arg, x);
          switch (n.fn) {
            case Function::exp:
              return exp(a);
            case Function::ln:
              return checked_log(a);
            case Function::sqrt:
              return checked_sqrt(a);
            case Function::sin:
              return sin(a);
            case Function::cos:
              return cos(a);
          }
          throw ValidationError("corrupt expression node");
        }
      },
      e.node().v);
}

}  // namespace detail

/// Evaluates the expression with x bound to a scalar or a jet. Domain errors are
/// rethrown annotated with the expansion point.
template <typename T>
T evaluate(const Expr& e, const T& x) {
  try {
    return detail::evaluate_node(e, x);
  } catch (const DomainError& err) {
    if (err.point()) throw;
    throw DomainError(err.what(), static_cast<double>(primal(x)));
  }
}

/// Order-N jet of the expression at x0.
template <int Order = 6>
Jet<double, Order> eval_jet(const Expr& e, double x0) {
  return evaluate(e, Jet<double, Order>::variable(x0));
}

inline double eval_value(const Expr& e, double x0) { return evaluate(e, x0); }

}  // namespace beamsym
