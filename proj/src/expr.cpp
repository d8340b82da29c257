#include "beamsym/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

namespace beamsym {

namespace {

std::shared_ptr<const ExprNode> make(auto&& alt) {
  return std::make_shared<const ExprNode>(ExprNode{std::forward<decltype(alt)>(alt)});
}

Expr binary(BinaryOp op, const Expr& a, const Expr& b) { return Expr(make(BinaryNode{op, a, b})); }

}  // namespace

Expr::Expr() : node_(make(NumberNode{0.0})) {}

bool Expr::is_constant() const {
  return std::visit(
      [](const auto& n) -> bool {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, NumberNode>) {
          return true;
        } else if constexpr (std::is_same_v<N, VariableNode>) {
          return false;
        } else if constexpr (std::is_same_v<N, NegateNode>) {
          return n.operand.is_constant();
        } else if constexpr (std::is_same_v<N, BinaryNode>) {
          return n.lhs.is_constant() && n.rhs.is_constant();
        } else {
          return n.arg.is_constant();
        }
      },
      node_->v);
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->v.index() != b.node_->v.index()) return false;
  return std::visit(
      [&](const auto& lhs) -> bool {
        using N = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<N>(b.node_->v);
        if constexpr (std::is_same_v<N, NumberNode>) {
          return lhs.value == rhs.value;
        } else if constexpr (std::is_same_v<N, VariableNode>) {
          return true;
        } else if constexpr (std::is_same_v<N, NegateNode>) {
          return lhs.operand == rhs.operand;
        } else if constexpr (std::is_same_v<N, BinaryNode>) {
          return lhs.op == rhs.op && lhs.lhs == rhs.lhs && lhs.rhs == rhs.rhs;
        } else {
          return lhs.fn == rhs.fn && lhs.arg == rhs.arg;
        }
      },
      a.node_->v);
}

Expr number(double value) {
  if (!std::isfinite(value)) throw ValidationError("expression literals must be finite");
  if (std::signbit(value)) return -Expr(make(NumberNode{-value}));
  return Expr(make(NumberNode{value}));
}

Expr variable() { return Expr(make(VariableNode{})); }
Expr operator-(const Expr& a) { return Expr(make(NegateNode{a})); }
Expr operator+(const Expr& a, const Expr& b) { return binary(BinaryOp::add, a, b); }
Expr operator-(const Expr& a, const Expr& b) { return binary(BinaryOp::sub, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return binary(BinaryOp::mul, a, b); }
Expr operator/(const Expr& a, const Expr& b) { return binary(BinaryOp::div, a, b); }
Expr pow(const Expr& base, const Expr& exponent) { return binary(BinaryOp::pow, base, exponent); }
Expr call(Function fn, const Expr& arg) { return Expr(make(CallNode{fn, arg})); }

std::string_view function_name(Function fn) {
  switch (fn) {
    case Function::exp:
      return "exp";
    case Function::ln:
      return "ln";
    case Function::sqrt:
      return "sqrt";
    case Function::sin:
      return "sin";
    case Function::cos:
      return "cos";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

constexpr std::array<Function, 5> kFunctions = {Function::exp, Function::ln, Function::sqrt, Function::sin,
                                                Function::cos};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse() {
    Expr e = expr();
    skip_space();
    if (pos_ < src_.size()) {
      if (src_[pos_] == ')') fail(ParseErrorKind::unbalanced_parenthesis, pos_, "unmatched ')'");
      unexpected();
    }
    return e;
  }

 private:
  [[noreturn]] void fail(ParseErrorKind kind, std::size_t at, const std::string& what) const {
    throw ParseError(kind, at, what);
  }

  [[noreturn]] void unexpected() const {
    if (pos_ >= src_.size()) fail(ParseErrorKind::unexpected_token, pos_, "unexpected end of input");
    const char c = src_[pos_];
    if (!is_token_start(c)) fail(ParseErrorKind::lexical, pos_, std::string("invalid character '") + c + "'");
    fail(ParseErrorKind::unexpected_token, pos_, std::string("unexpected '") + c + "'");
  }

  static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
  static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
  static bool is_token_start(char c) {
    return is_ident_start(c) || is_digit(c) || c == '.' || c == '+' || c == '-' || c == '*' || c == '/' ||
           c == '^' || c == '(' || c == ')';
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr expr() {
    Expr acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Expr term() {
    Expr acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        acc = acc / unary();
      } else {
        return acc;
      }
    }
  }

  Expr unary() {
    if (accept('-')) return -unary();
    return factor();
  }

  Expr factor() {
    Expr b = base();
    if (accept('^')) return pow(b, unary());
    return b;
  }

  Expr base() {
    skip_space();
    if (pos_ >= src_.size()) unexpected();
    const char c = src_[pos_];
    if (is_digit(c) || c == '.') return literal();
    if (is_ident_start(c)) return identifier();
    if (c == '(') {
      const std::size_t open = pos_++;
      Expr inner = expr();
      close_paren(open);
      return inner;
    }
    unexpected();
  }

  void close_paren(std::size_t open) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == ')') {
      ++pos_;
      return;
    }
    if (pos_ >= src_.size())
      fail(ParseErrorKind::unbalanced_parenthesis, pos_,
           "missing ')' for '(' at offset " + std::to_string(open));
    unexpected();
  }

  Expr literal() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_, ++n;
      return n;
    };
    std::size_t n = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      n += digits();
    }
    if (n == 0) fail(ParseErrorKind::lexical, start, "malformed number");
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
      if (look < src_.size() && is_digit(src_[look])) {
        pos_ = look;
        digits();
      }
    }
    double v = 0.0;
    const char* first = src_.data() + start;
    const char* last = src_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || !std::isfinite(v))
      fail(ParseErrorKind::lexical, start, "malformed number");
    return Expr(make(NumberNode{v}));
  }

  Expr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
    const std::string_view name = src_.substr(start, pos_ - start);
    if (name == "x") return variable();
    for (Function fn : kFunctions) {
      if (name != function_name(fn)) continue;
      skip_space();
      if (pos_ >= src_.size() || src_[pos_] != '(') unexpected();
      const std::size_t open = pos_++;
      Expr arg = expr();
      close_paren(open);
      return call(fn, arg);
    }
    fail(ParseErrorKind::unknown_identifier, start, "unknown identifier '" + std::string(name) + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view src) { return Parser(src).parse(); }

// ---------------------------------------------------------------------------
// Unparsing. Precedence levels: 1 additive, 2 multiplicative, 3 negation,
// 4 power, 5 atoms. A child is parenthesized when its level is below the
// level its grammar slot admits.

namespace {

int level(const Expr& e) {
  return std::visit(
      [](const auto& n) -> int {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, NegateNode>) {
          return 3;
        } else if constexpr (std::is_same_v<N, BinaryNode>) {
          switch (n.op) {
            case BinaryOp::add:
            case BinaryOp::sub:
              return 1;
            case BinaryOp::mul:
            case BinaryOp::div:
              return 2;
            case BinaryOp::pow:
              return 4;
          }
          return 0;
        } else {
          return 5;
        }
      },
      e.node().v);
}

void emit(const Expr& e, std::string& out);

void emit_at(const Expr& e, int min_level, std::string& out) {
  if (level(e) < min_level) {
    out += '(';
    emit(e, out);
    out += ')';
  } else {
    emit(e, out);
  }
}

void emit_number(double v, std::string& out) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  out.append(buf.data(), end);
}

void emit(const Expr& e, std::string& out) {
  std::visit(
      [&](const auto& n) {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, NumberNode>) {
          emit_number(n.value, out);
        } else if constexpr (std::is_same_v<N, VariableNode>) {
          out += 'x';
        } else if constexpr (std::is_same_v<N, NegateNode>) {
          out += '-';
          emit_at(n.operand, 3, out);
        } else if constexpr (std::is_same_v<N, BinaryNode>) {
          switch (n.op) {
            case BinaryOp::add:
            case BinaryOp::sub:
              emit_at(n.lhs, 1, out);
              out += n.op == BinaryOp::add ? " + " : " - ";
              emit_at(n.rhs, 2, out);
              break;
            case BinaryOp::mul:
            case BinaryOp::div:
              emit_at(n.lhs, 2, out);
              out += n.op == BinaryOp::mul ? '*' : '/';
              emit_at(n.rhs, 3, out);
              break;
            case BinaryOp::pow:
              emit_at(n.lhs, 5, out);
              out += '^';
              emit_at(n.rhs, 3, out);
              break;
          }
        } else {
          out += function_name(n.fn);
          out += '(';
          emit(n.arg, out);
          out += ')';
        }
      },
      e.node().v);
}

}  // namespace

std::string unparse(const Expr& e) {
  std::string out;
  emit(e, out);
  return out;
}

}  // namespace beamsym
