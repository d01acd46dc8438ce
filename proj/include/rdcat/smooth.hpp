#pragma once

// Symbolic smooth expressions: immutable, shared DAG nodes over
// { var, constant, +, *, neg, sin, cos, exp }.
//
// Smart constructors fold constants and absorb 0/1, nothing more. Traversals
// that can revisit shared nodes (evaluation, differentiation, substitution)
// memoize on node identity so nested derivatives stay linear in DAG size.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <system_error>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rdcat/error.hpp"
#include "rdcat/text.hpp"

namespace rdcat {

class SmoothExpr {
 public:
  enum class Op { var, constant, add, mul, neg, sin, cos, exp };

  static SmoothExpr var(std::size_t i) {
    if (i == 0) throw SignatureError("variable indices are 1-based");
    return SmoothExpr(make(Op::var, 0.0, i, {}, {}));
  }

  static SmoothExpr constant(double c) { return SmoothExpr(make(Op::constant, c, 0, {}, {})); }

  friend SmoothExpr operator+(const SmoothExpr& a, const SmoothExpr& b) {
    if (a.is_constant(0.0)) return b;
    if (b.is_constant(0.0)) return a;
    if (a.op() == Op::constant && b.op() == Op::constant) return constant(a.value() + b.value());
    return SmoothExpr(make(Op::add, 0.0, 0, a.node_, b.node_));
  }

  friend SmoothExpr operator*(const SmoothExpr& a, const SmoothExpr& b) {
    if (a.is_constant(0.0) || b.is_constant(1.0)) return a;
    if (b.is_constant(0.0) || a.is_constant(1.0)) return b;
    if (a.op() == Op::constant && b.op() == Op::constant) return constant(a.value() * b.value());
    return SmoothExpr(make(Op::mul, 0.0, 0, a.node_, b.node_));
  }

  friend SmoothExpr operator-(const SmoothExpr& a) {
    if (a.op() == Op::constant) return constant(-a.value());
    if (a.op() == Op::neg) return a.lhs();
    return SmoothExpr(make(Op::neg, 0.0, 0, a.node_, {}));
  }

  static SmoothExpr sin(const SmoothExpr& a) { return unary(Op::sin, a, [](double x) { return std::sin(x); }); }
  static SmoothExpr cos(const SmoothExpr& a) { return unary(Op::cos, a, [](double x) { return std::cos(x); }); }
  static SmoothExpr exp(const SmoothExpr& a) { return unary(Op::exp, a, [](double x) { return std::exp(x); }); }

  Op op() const { return node_->op; }
  double value() const { return node_->value; }
  std::size_t index() const { return node_->index; }
  SmoothExpr lhs() const { return SmoothExpr(node_->lhs); }
  SmoothExpr rhs() const { return SmoothExpr(node_->rhs); }
  bool is_constant(double c) const { return op() == Op::constant && value() == c; }

  /// Identity of the shared node, for memoization.
  const void* id() const { return node_.get(); }

  /// Largest variable index mentioned, 0 if none.
  std::size_t max_var() const {
    std::unordered_map<const void*, std::size_t> memo;
    std::function<std::size_t(const SmoothExpr&)> go = [&](const SmoothExpr& e) -> std::size_t {
      if (auto it = memo.find(e.id()); it != memo.end()) return it->second;
      std::size_t out = 0;
      switch (e.op()) {
        case Op::var: out = e.index(); break;
        case Op::constant: break;
        case Op::add:
        case Op::mul: out = std::max(go(e.lhs()), go(e.rhs())); break;
        default: out = go(e.lhs());
      }
      memo.emplace(e.id(), out);
      return out;
    };
    return go(*this);
  }

  /// Structural equality of the trees.
  friend bool operator==(const SmoothExpr& a, const SmoothExpr& b) {
    if (a.node_ == b.node_) return true;
    if (a.op() != b.op()) return false;
    switch (a.op()) {
      case Op::var: return a.index() == b.index();
      case Op::constant: return a.value() == b.value();
      case Op::add:
      case Op::mul: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
      default: return a.lhs() == b.lhs();
    }
  }

 private:
  struct Node {
    Op op;
    double value;
    std::size_t index;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit SmoothExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static std::shared_ptr<const Node> make(Op op, double value, std::size_t index, std::shared_ptr<const Node> lhs,
                                          std::shared_ptr<const Node> rhs) {
    return std::make_shared<const Node>(Node{op, value, index, std::move(lhs), std::move(rhs)});
  }

  template <class F>
  static SmoothExpr unary(Op op, const SmoothExpr& a, F fold) {
    if (a.op() == Op::constant) return constant(fold(a.value()));
    return SmoothExpr(make(op, 0.0, 0, a.node_, {}));
  }

  std::shared_ptr<const Node> node_;
};

/// Symbolic partial derivative with respect to x_i (1-based).
inline SmoothExpr smooth_partial(const SmoothExpr& e, std::size_t i) {
  using Op = SmoothExpr::Op;
  std::unordered_map<const void*, SmoothExpr> memo;
  std::function<SmoothExpr(const SmoothExpr&)> d = [&](const SmoothExpr& x) -> SmoothExpr {
    if (auto it = memo.find(x.id()); it != memo.end()) return it->second;
    SmoothExpr out = SmoothExpr::constant(0.0);
    switch (x.op()) {
      case Op::var: out = SmoothExpr::constant(x.index() == i ? 1.0 : 0.0); break;
      case Op::constant: break;
      case Op::add: out = d(x.lhs()) + d(x.rhs()); break;
      case Op::mul: out = d(x.lhs()) * x.rhs() + x.lhs() * d(x.rhs()); break;
      case Op::neg: out = -d(x.lhs()); break;
      case Op::sin: out = d(x.lhs()) * SmoothExpr::cos(x.lhs()); break;
      case Op::cos: out = d(x.lhs()) * -SmoothExpr::sin(x.lhs()); break;
      case Op::exp: out = d(x.lhs()) * x; break;
    }
    memo.emplace(x.id(), out);
    return out;
  };
  return d(e);
}

/// Simultaneous substitution x_i := args[i-1].
inline SmoothExpr smooth_substitute(const SmoothExpr& e, std::span<const SmoothExpr> args) {
  using Op = SmoothExpr::Op;
  std::unordered_map<const void*, SmoothExpr> memo;
  std::function<SmoothExpr(const SmoothExpr&)> go = [&](const SmoothExpr& x) -> SmoothExpr {
    if (auto it = memo.find(x.id()); it != memo.end()) return it->second;
    SmoothExpr out = x;
    switch (x.op()) {
      case Op::var:
        if (x.index() > args.size()) {
          throw SignatureError("x" + std::to_string(x.index()) + " has no substitute among " +
                               std::to_string(args.size()) + " arguments");
        }
        out = args[x.index() - 1];
        break;
      case Op::constant: break;
      case Op::add: out = go(x.lhs()) + go(x.rhs()); break;
      case Op::mul: out = go(x.lhs()) * go(x.rhs()); break;
      case Op::neg: out = -go(x.lhs()); break;
      case Op::sin: out = SmoothExpr::sin(go(x.lhs())); break;
      case Op::cos: out = SmoothExpr::cos(go(x.lhs())); break;
      case Op::exp: out = SmoothExpr::exp(go(x.lhs())); break;
    }
    memo.emplace(x.id(), out);
    return out;
  };
  return go(e);
}

/// Evaluator that shares its memo across several expressions at one point.
class SmoothEvaluator {
 public:
  explicit SmoothEvaluator(std::span<const double> point) : point_(point) {}

  double operator()(const SmoothExpr& x) {
    using Op = SmoothExpr::Op;
    if (auto it = memo_.find(x.id()); it != memo_.end()) return it->second;
    double out = 0.0;
    switch (x.op()) {
      case Op::var:
        if (x.index() > point_.size()) throw SignatureError("x" + std::to_string(x.index()) + " outside the point");
        out = point_[x.index() - 1];
        break;
      case Op::constant: out = x.value(); break;
      case Op::add: out = (*this)(x.lhs()) + (*this)(x.rhs()); break;
      case Op::mul: out = (*this)(x.lhs()) * (*this)(x.rhs()); break;
      case Op::neg: out = -(*this)(x.lhs()); break;
      case Op::sin: out = std::sin((*this)(x.lhs())); break;
      case Op::cos: out = std::cos((*this)(x.lhs())); break;
      case Op::exp: out = std::exp((*this)(x.lhs())); break;
    }
    memo_.emplace(x.id(), out);
    return out;
  }

 private:
  std::span<const double> point_;
  std::unordered_map<const void*, double> memo_;
};

inline double smooth_eval(const SmoothExpr& e, std::span<const double> point) {
  SmoothEvaluator eval(point);
  return eval(e);
}

namespace detail {

inline std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

// Precedence: 0 sum, 1 product, 2 prefix minus, 3 atom.
inline int precedence(const SmoothExpr& e) {
  using Op = SmoothExpr::Op;
  switch (e.op()) {
    case Op::add: return 0;
    case Op::mul: return 1;
    case Op::neg: return 2;
    case Op::constant: return e.value() < 0 || std::signbit(e.value()) ? 2 : 3;
    default: return 3;
  }
}

inline void print_expr(const SmoothExpr& e, int min_prec, std::string& out) {
  using Op = SmoothExpr::Op;
  const bool parens = precedence(e) < min_prec;
  if (parens) out += '(';
  switch (e.op()) {
    case Op::var: out += 'x' + std::to_string(e.index()); break;
    case Op::constant: out += format_double(e.value()); break;
    case Op::add:
      print_expr(e.lhs(), 0, out);
      out += " + ";
      print_expr(e.rhs(), 1, out);
      break;
    case Op::mul:
      print_expr(e.lhs(), 1, out);
      out += '*';
      print_expr(e.rhs(), 2, out);
      break;
    case Op::neg:
      out += '-';
      print_expr(e.lhs(), 2, out);
      break;
    case Op::sin:
    case Op::cos:
    case Op::exp:
      out += e.op() == Op::sin ? "sin(" : e.op() == Op::cos ? "cos(" : "exp(";
      print_expr(e.lhs(), 0, out);
      out += ')';
      break;
  }
  if (parens) out += ')';
}

}  // namespace detail

inline std::string to_string(const SmoothExpr& e) {
  std::string out;
  detail::print_expr(e, 0, out);
  return out;
}

namespace detail {

class SmoothParser {
 public:
  SmoothParser(Cursor& in, std::size_t nvars) : in_(in), nvars_(nvars) {}

  // sum := product (('+' | '-') product)*
  SmoothExpr sum() {
    SmoothExpr acc = product();
    for (;;) {
      if (in_.consume('+')) {
        acc = acc + product();
      } else if (in_.peek() == '-') {
        in_.consume('-');
        acc = acc + -product();
      } else {
        return acc;
      }
    }
  }

 private:
  // product := prefix ('*' prefix)*
  SmoothExpr product() {
    SmoothExpr acc = prefix();
    while (in_.consume('*')) acc = acc * prefix();
    return acc;
  }

  // prefix := '-' prefix | power
  SmoothExpr prefix() {
    if (in_.consume('-')) return -prefix();
    return power();
  }

  // power := atom ('^' natural)?
  SmoothExpr power() {
    SmoothExpr base = atom();
    if (!in_.consume('^')) return base;
    in_.skip_ws();
    const auto digits = in_.take_digits();
    if (digits.empty()) in_.fail("expected a natural exponent");
    const auto k = parse_integer<std::size_t>(digits);
    if (k == 0) return SmoothExpr::constant(1.0);
    SmoothExpr acc = base;
    for (std::size_t i = 1; i < k; ++i) acc = acc * base;
    return acc;
  }

  SmoothExpr atom() {
    in_.skip_ws();
    const std::size_t start = in_.offset();
    const char c = in_.peek_raw();
    if (c == '(') {
      in_.consume('(');
      SmoothExpr inner = sum();
      in_.expect(')');
      return inner;
    }
    if (c == 'x' && std::isdigit(static_cast<unsigned char>(in_.peek_raw(1)))) {
      in_.rewind(start + 1);
      const auto i = parse_integer<std::size_t>(in_.take_digits());
      if (i == 0 || i > nvars_) {
        in_.fail_at(start, "variable x" + std::to_string(i) + " outside " + std::to_string(nvars_) + " variables");
      }
      return SmoothExpr::var(i);
    }
    for (auto [word, op] : {std::pair{"sin", SmoothExpr::Op::sin}, std::pair{"cos", SmoothExpr::Op::cos},
                            std::pair{"exp", SmoothExpr::Op::exp}}) {
      if (in_.consume_word(word)) {
        in_.expect('(');
        SmoothExpr arg = sum();
        in_.expect(')');
        if (op == SmoothExpr::Op::sin) return SmoothExpr::sin(arg);
        if (op == SmoothExpr::Op::cos) return SmoothExpr::cos(arg);
        return SmoothExpr::exp(arg);
      }
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return SmoothExpr::constant(number());
    in_.fail("expected a number, variable, function call or '('");
  }

  double number() {
    const std::size_t start = in_.offset();
    auto is_digit = [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; };
    std::string text(in_.take_while(is_digit));
    if (in_.peek_raw() == '.') {
      in_.rewind(in_.offset() + 1);
      text += '.';
      text += in_.take_while(is_digit);
    }
    if (in_.peek_raw() == 'e' || in_.peek_raw() == 'E') {
      const std::size_t mark = in_.offset();
      in_.rewind(mark + 1);
      std::string exponent = "e";
      if (in_.peek_raw() == '+' || in_.peek_raw() == '-') {
        exponent += in_.peek_raw();
        in_.rewind(in_.offset() + 1);
      }
      const auto digits = in_.take_while(is_digit);
      if (digits.empty()) {
        in_.rewind(mark);
      } else {
        text += exponent;
        text += digits;
      }
    }
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
      in_.fail_at(start, "malformed real literal '" + text + "'");
    }
    return v;
  }

  Cursor& in_;
  std::size_t nvars_;
};

}  // namespace detail

/// Expression grammar: the polynomial grammar plus sin(...), cos(...),
/// exp(...), unary and binary '-', parentheses and real literals.
inline SmoothExpr parse_smooth_expr(Cursor& in, std::size_t nvars) {
  detail::SmoothParser parser(in, nvars);
  return parser.sum();
}

inline SmoothExpr parse_smooth_expr(std::size_t nvars, std::string_view text) {
  Cursor in(text);
  auto e = parse_smooth_expr(in, nvars);
  if (!in.at_end()) in.fail("unexpected trailing input");
  return e;
}

}  // namespace rdcat
