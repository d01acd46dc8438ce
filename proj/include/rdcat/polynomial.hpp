#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rdcat/error.hpp"
#include "rdcat/rig.hpp"
#include "rdcat/text.hpp"

namespace rdcat {

/// Exponent vector; entry i is the exponent of x_{i+1}. Trailing zeros are
/// trimmed, so the constant monomial is the empty vector.
using Monomial = std::vector<std::uint32_t>;

inline void trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

inline std::uint64_t total_degree(const Monomial& m) {
  std::uint64_t d = 0;
  for (auto e : m) d += e;
  return d;
}

/// Graded lexicographic order, largest first: higher total degree first, ties
/// broken by the first differing exponent (x1 > x2 > ...).
struct GradedLexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const auto da = total_degree(a);
    const auto db = total_degree(b);
    if (da != db) return da > db;
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      const auto ea = i < a.size() ? a[i] : 0U;
      const auto eb = i < b.size() ? b[i] : 0U;
      if (ea != eb) return ea > eb;
    }
    return false;
  }
};

inline Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

/// Polynomial over a commutative rig in canonical form: no zero coefficients,
/// terms kept in graded-lex order. Two polynomials over the same rig are equal
/// iff their term maps are equal.
///
/// The variable count is part of the value. A polynomial that only mentions x1
/// may still live in three variables.
template <Rig R>
class Polynomial {
 public:
  using rig_type = R;
  using value_type = typename R::value_type;
  using Terms = std::map<Monomial, value_type, GradedLexDescending>;

  Polynomial(R rig, std::size_t nvars) : rig_(std::move(rig)), nvars_(nvars) {}

  static Polynomial constant(R rig, std::size_t nvars, const value_type& c) {
    Polynomial p(std::move(rig), nvars);
    p.accumulate({}, c);
    return p;
  }

  /// x_i, 1-based.
  static Polynomial variable(R rig, std::size_t nvars, std::size_t i) {
    if (i == 0 || i > nvars) throw SignatureError("variable x" + std::to_string(i) + " outside " +
                                                  std::to_string(nvars) + " variables");
    Polynomial p(rig, nvars);
    Monomial m(i, 0);
    m[i - 1] = 1;
    p.accumulate(std::move(m), rig.one());
    return p;
  }

  static Polynomial from_terms(R rig, std::size_t nvars, const std::vector<std::pair<Monomial, value_type>>& terms) {
    Polynomial p(std::move(rig), nvars);
    for (const auto& [m, c] : terms) p.accumulate(m, c);
    return p;
  }

  const R& rig() const { return rig_; }
  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::uint64_t degree() const { return terms_.empty() ? 0 : total_degree(terms_.begin()->first); }

  /// Number of variables actually mentioned (highest index with a nonzero exponent).
  std::size_t support() const {
    std::size_t s = 0;
    for (const auto& [m, c] : terms_) s = std::max(s, m.size());
    return s;
  }

  /// Same terms in a different ambient variable count.
  Polynomial with_nvars(std::size_t n) const {
    if (support() > n) throw SignatureError("polynomial mentions x" + std::to_string(support()) +
                                            " and cannot live in " + std::to_string(n) + " variables");
    Polynomial p = *this;
    p.nvars_ = n;
    return p;
  }

  value_type coefficient(const Monomial& m) const {
    Monomial key = m;
    trim(key);
    auto it = terms_.find(key);
    return it == terms_.end() ? rig_.zero() : it->second;
  }

  /// Adds c * m into the polynomial, keeping canonical form.
  void accumulate(Monomial m, const value_type& c) {
    trim(m);
    if (m.size() > nvars_) throw SignatureError("monomial exceeds " + std::to_string(nvars_) + " variables");
    if (rdcat::is_zero(rig_, c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second = rig_.add(it->second, c);
      if (rdcat::is_zero(rig_, it->second)) terms_.erase(it);
    }
  }

  bool operator==(const Polynomial& o) const {
    if (!(rig_ == o.rig_) || nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b) {
      if (a->first != b->first || !rig_.equal(a->second, b->second)) return false;
    }
    return true;
  }

 private:
  R rig_;
  std::size_t nvars_;
  Terms terms_;
};

namespace detail {

template <Rig R>
void require_same_rig(const R& a, const R& b) {
  if (!(a == b)) throw RigMismatch("polynomials over different rigs: " + a.name() + " vs " + b.name());
}

template <Rig R>
Polynomial<R> partial_impl(const Polynomial<R>& p, std::size_t i, bool scale_by_exponent) {
  if (i == 0) throw SignatureError("variable indices are 1-based");
  const auto& rig = p.rig();
  Polynomial<R> out(rig, p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (i > m.size() || m[i - 1] == 0) continue;
    Monomial dm = m;
    const auto e = dm[i - 1]--;
    out.accumulate(std::move(dm), scale_by_exponent ? nat_scale(rig, e, c) : c);
  }
  return out;
}

}  // namespace detail

template <Rig R>
Polynomial<R> poly_add(const Polynomial<R>& p, const Polynomial<R>& q) {
  detail::require_same_rig(p.rig(), q.rig());
  Polynomial<R> out(p.rig(), std::max(p.nvars(), q.nvars()));
  for (const auto& [m, c] : p.terms()) out.accumulate(m, c);
  for (const auto& [m, c] : q.terms()) out.accumulate(m, c);
  return out;
}

template <Rig R>
Polynomial<R> poly_mul(const Polynomial<R>& p, const Polynomial<R>& q) {
  detail::require_same_rig(p.rig(), q.rig());
  const auto& rig = p.rig();
  Polynomial<R> out(rig, std::max(p.nvars(), q.nvars()));
  for (const auto& [mp, cp] : p.terms()) {
    for (const auto& [mq, cq] : q.terms()) out.accumulate(monomial_product(mp, mq), rig.mul(cp, cq));
  }
  return out;
}

template <Rig R>
Polynomial<R> operator+(const Polynomial<R>& p, const Polynomial<R>& q) {
  return poly_add(p, q);
}

template <Rig R>
Polynomial<R> operator*(const Polynomial<R>& p, const Polynomial<R>& q) {
  return poly_mul(p, q);
}

/// Formal partial derivative with respect to x_i (1-based).
template <Rig R>
Polynomial<R> poly_partial(const Polynomial<R>& p, std::size_t i) {
  return detail::partial_impl(p, i, true);
}

/// Simultaneous substitution x_i := args[i-1]. The result lives in the largest
/// variable count among the arguments.
template <Rig R>
Polynomial<R> poly_substitute(const Polynomial<R>& p, std::span<const Polynomial<R>> args) {
  if (args.size() < p.nvars()) {
    throw SignatureError("substitution needs " + std::to_string(p.nvars()) + " arguments, got " +
                         std::to_string(args.size()));
  }
  const auto& rig = p.rig();
  std::size_t nvars = 0;
  for (const auto& a : args) {
    detail::require_same_rig(rig, a.rig());
    nvars = std::max(nvars, a.nvars());
  }
  // powers[i][k] = args[i]^(k+1), filled on demand
  std::vector<std::vector<Polynomial<R>>> powers(p.nvars());
  auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial<R>& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(args[i]);
    while (cache.size() < e) cache.push_back(poly_mul(cache.back(), args[i]));
    return cache[e - 1];
  };
  Polynomial<R> out(rig, nvars);
  for (const auto& [m, c] : p.terms()) {
    Polynomial<R> term = Polynomial<R>::constant(rig, nvars, c);
    for (std::size_t i = 0; i < m.size() && !term.is_zero(); ++i) {
      if (m[i] != 0) term = poly_mul(term, power(i, m[i]));
    }
    for (const auto& [tm, tc] : term.terms()) out.accumulate(tm, tc);
  }
  return out;
}

template <Rig R>
Polynomial<R> poly_substitute(const Polynomial<R>& p, const std::vector<Polynomial<R>>& args) {
  return poly_substitute(p, std::span<const Polynomial<R>>(args));
}

template <Rig R>
typename R::value_type poly_eval(const Polynomial<R>& p, std::span<const typename R::value_type> point) {
  if (point.size() < p.nvars()) {
    throw SignatureError("evaluation needs " + std::to_string(p.nvars()) + " coordinates, got " +
                         std::to_string(point.size()));
  }
  const auto& rig = p.rig();
  auto total = rig.zero();
  for (const auto& [m, c] : p.terms()) {
    auto term = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::uint32_t k = 0; k < m[i]; ++k) term = rig.mul(term, point[i]);
    }
    total = rig.add(total, term);
  }
  return total;
}

template <Rig R>
typename R::value_type poly_eval(const Polynomial<R>& p, const std::vector<typename R::value_type>& point) {
  return poly_eval(p, std::span<const typename R::value_type>(point));
}

/// Canonical text: terms in graded-lex order joined by " + ", factors joined
/// by "*", unit coefficients omitted on non-constant terms.
template <Rig R>
std::string to_string(const Polynomial<R>& p) {
  const auto& rig = p.rig();
  if (p.is_zero()) return rig.to_string(rig.zero());
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    std::string term;
    if (m.empty() || !rig.equal(c, rig.one())) term = rig.to_string(c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!term.empty()) term += '*';
      term += 'x' + std::to_string(i + 1);
      if (m[i] > 1) term += '^' + std::to_string(m[i]);
    }
    out += term;
  }
  return out;
}

namespace detail {

template <Rig R>
typename R::value_type parse_coefficient(Cursor& in, const R& rig) {
  in.skip_ws();
  const std::size_t start = in.offset();
  std::string token;
  if (in.consume_literal("-inf")) {
    token = "-inf";
  } else if (in.consume_word("true")) {
    token = "true";
  } else if (in.consume_word("false")) {
    token = "false";
  } else {
    if (in.peek_raw() == '-') {
      token += '-';
      in.rewind(in.offset() + 1);
    }
    const auto digits = in.take_digits();
    if (digits.empty()) in.fail("expected a coefficient or variable");
    token += digits;
    if (in.peek_raw() == '/') {
      in.rewind(in.offset() + 1);
      const auto den = in.take_digits();
      if (den.empty()) in.fail("expected a denominator");
      token += '/';
      token += den;
    }
  }
  try {
    return rig.parse(token);
  } catch (const std::exception& e) {
    in.fail_at(start, "'" + token + "' is not an element of rig " + rig.name() + " (" + e.what() + ")");
  }
}

}  // namespace detail

/// Reads `term (+ term)*` where term = factor (* factor)* and factor is a rig
/// literal, xK, or xK^E. Stops at the first character that cannot continue
/// the polynomial.
template <Rig R>
Polynomial<R> parse_polynomial(Cursor& in, const R& rig, std::size_t nvars) {
  Polynomial<R> out(rig, nvars);
  do {
    auto coefficient = rig.one();
    Monomial m;
    do {
      in.skip_ws();
      if (in.peek_raw() == 'x' && std::isdigit(static_cast<unsigned char>(in.peek_raw(1)))) {
        const std::size_t start = in.offset();
        in.rewind(start + 1);
        const auto index = detail::parse_integer<std::size_t>(in.take_digits());
        if (index == 0 || index > nvars) {
          in.fail_at(start, "variable x" + std::to_string(index) + " outside " + std::to_string(nvars) +
                                " variables");
        }
        std::uint32_t exponent = 1;
        if (in.consume('^')) {
          in.skip_ws();
          const auto e = in.take_digits();
          if (e.empty()) in.fail("expected an exponent");
          exponent = detail::parse_integer<std::uint32_t>(e);
        }
        if (m.size() < index) m.resize(index, 0);
        m[index - 1] += exponent;
      } else {
        coefficient = rig.mul(coefficient, detail::parse_coefficient(in, rig));
      }
    } while (in.consume('*'));
    out.accumulate(std::move(m), coefficient);
  } while (in.consume('+'));
  return out;
}

template <Rig R>
Polynomial<R> parse_polynomial(const R& rig, std::size_t nvars, std::string_view text) {
  Cursor in(text);
  auto p = parse_polynomial(in, rig, nvars);
  if (!in.at_end()) in.fail("unexpected trailing input");
  return p;
}

}  // namespace rdcat
