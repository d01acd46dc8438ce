#pragma once

// Smooth: a morphism n -> m is an m-tuple of symbolic expressions in x1..xn.
// Derivatives are exact symbolic trees; only equality is numeric, by sampling
// points of [-1, 1]^n.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rdcat/category.hpp"
#include "rdcat/literal.hpp"
#include "rdcat/smooth.hpp"

namespace rdcat {

class SmoothMorphism {
 public:
  SmoothMorphism(std::size_t dom, std::vector<SmoothExpr> components)
      : dom_(dom), components_(std::move(components)) {
    for (const auto& e : components_) {
      if (const auto v = e.max_var(); v > dom_) {
        throw SignatureError("component mentions x" + std::to_string(v) + " but the domain has arity " +
                             std::to_string(dom_));
      }
    }
  }

  std::size_t dom() const { return dom_; }
  std::size_t cod() const { return components_.size(); }
  const std::vector<SmoothExpr>& components() const { return components_; }
  const SmoothExpr& operator[](std::size_t j) const { return components_[j]; }

  /// Structural equality of the expression trees (not semantic equality).
  bool operator==(const SmoothMorphism& o) const { return dom_ == o.dom_ && components_ == o.components_; }

 private:
  std::size_t dom_;
  std::vector<SmoothExpr> components_;
};

inline std::string to_string(const SmoothMorphism& f) {
  std::vector<std::string> items;
  for (const auto& e : f.components()) items.push_back(to_string(e));
  return "smooth(" + signature(f) + ")" + literal_body(items);
}

inline SmoothMorphism parse_smooth_morphism(Cursor& in) {
  const auto h = read_literal_header(in, "smooth");
  std::vector<SmoothExpr> comps;
  read_literal_body(in, h, h.cod, [&](std::size_t) { comps.push_back(parse_smooth_expr(in, h.dom)); });
  return SmoothMorphism(h.dom, std::move(comps));
}

/// Parses `smooth(n->m){ e1 ; ... ; em }`.
inline SmoothMorphism parse_smooth_morphism(std::string_view text) {
  Cursor in(text);
  auto f = parse_smooth_morphism(in);
  if (!in.at_end()) in.fail("unexpected trailing input");
  return f;
}

/// Componentwise value at a point, or nullopt when any component is not finite.
inline std::optional<std::vector<double>> smooth_eval(const SmoothMorphism& f, std::span<const double> point) {
  if (point.size() != f.dom()) {
    throw SignatureError("point of dimension " + std::to_string(point.size()) + " for " + signature(f));
  }
  SmoothEvaluator eval(point);
  std::vector<double> out;
  out.reserve(f.cod());
  for (const auto& e : f.components()) {
    const double v = eval(e);
    if (!std::isfinite(v)) return std::nullopt;
    out.push_back(v);
  }
  return out;
}

struct SmoothEquality {
  std::size_t samples = 50;
  double tol = 1e-7;
  std::uint64_t seed = 42;
};

struct SmoothComparison {
  bool equal = true;
  double worst_deviation = 0.0;
  std::vector<double> worst_point;
  std::vector<double> lhs_at_worst;
  std::vector<double> rhs_at_worst;
  std::size_t used = 0;  // samples where both sides were finite
};

/// |a - b| / max(1, |a|, |b|): absolute near zero, relative for large values.
inline double smooth_deviation(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

/// Sampled equality. A sample where either side is non-finite is discarded;
/// if every sample is discarded the maps are reported unequal.
inline SmoothComparison smooth_equal(const SmoothMorphism& f, const SmoothMorphism& g, const SmoothEquality& params) {
  require_same_signature(f, g, "sampled comparison of morphisms with different signatures");
  SmoothComparison out;
  Rng rng(params.seed);
  std::vector<double> point(f.dom());
  for (std::size_t k = 0; k < params.samples; ++k) {
    for (auto& x : point) x = rng.uniform(-1.0, 1.0);
    auto a = smooth_eval(f, point);
    auto b = smooth_eval(g, point);
    if (!a || !b) continue;
    double dev = 0.0;
    for (std::size_t j = 0; j < a->size(); ++j) dev = std::max(dev, smooth_deviation((*a)[j], (*b)[j]));
    if (++out.used == 1 || dev > out.worst_deviation) {
      out.worst_deviation = dev;
      out.worst_point = point;
      out.lhs_at_worst = std::move(*a);
      out.rhs_at_worst = std::move(*b);
    }
  }
  out.equal = out.used > 0 && out.worst_deviation <= params.tol;
  return out;
}

namespace detail {

inline std::string format_vector(const std::vector<double>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_double(v[i]);
  }
  return out + ")";
}

}  // namespace detail

struct SmoothCategory {
  using Morphism = SmoothMorphism;

  SmoothEquality equality{};
  Fault fault = Fault::none;

  std::string name() const { return "smooth"; }

  Morphism identity(std::size_t n) const {
    std::vector<SmoothExpr> comps;
    for (std::size_t i = 1; i <= n; ++i) comps.push_back(SmoothExpr::var(i));
    return Morphism(n, std::move(comps));
  }

  Morphism compose(const Morphism& f, const Morphism& g) const {
    require_composable(f, g);
    std::vector<SmoothExpr> comps;
    for (const auto& e : g.components()) comps.push_back(smooth_substitute(e, f.components()));
    return Morphism(f.dom(), std::move(comps));
  }

  Morphism pair(const Morphism& f, const Morphism& g) const {
    if (f.dom() != g.dom()) throw SignatureError("pairing domains differ: " + signature(f) + " vs " + signature(g));
    auto comps = f.components();
    comps.insert(comps.end(), g.components().begin(), g.components().end());
    return Morphism(f.dom(), std::move(comps));
  }

  Morphism projection(Split s, Side side) const {
    std::vector<SmoothExpr> comps;
    const std::size_t first = side == Side::left ? 1 : s.left + 1;
    const std::size_t count = side == Side::left ? s.left : s.right;
    for (std::size_t i = 0; i < count; ++i) comps.push_back(SmoothExpr::var(first + i));
    return Morphism(s.total(), std::move(comps));
  }

  Morphism add(const Morphism& f, const Morphism& g) const {
    require_same_signature(f, g, "sum of morphisms with different signatures");
    std::vector<SmoothExpr> comps;
    for (std::size_t j = 0; j < f.cod(); ++j) comps.push_back(f[j] + g[j]);
    return Morphism(f.dom(), std::move(comps));
  }

  Morphism zero(std::size_t a, std::size_t b) const {
    return Morphism(a, std::vector<SmoothExpr>(b, SmoothExpr::constant(0.0)));
  }

  Morphism bang(std::size_t a) const { return zero(a, 0); }

  /// D[F](x, v) = J_F(x) v, with v_i = x(n+i).
  Morphism forward(const Morphism& f) const {
    const std::size_t n = f.dom();
    std::vector<SmoothExpr> comps;
    for (const auto& e : f.components()) {
      SmoothExpr acc = SmoothExpr::constant(0.0);
      for (std::size_t i = 1; i <= n; ++i) acc = acc + smooth_partial(e, i) * SmoothExpr::var(n + i);
      comps.push_back(acc);
    }
    return Morphism(2 * n, std::move(comps));
  }

  /// R[F](x, y) = J_F(x)^T y, with y_j = x(n+j).
  Morphism reverse(const Morphism& f) const {
    const std::size_t n = f.dom();
    const std::size_t m = f.cod();
    std::vector<SmoothExpr> comps;
    for (std::size_t i = 1; i <= n; ++i) {
      SmoothExpr acc = SmoothExpr::constant(0.0);
      for (std::size_t j = 1; j <= m; ++j) acc = acc + smooth_partial(f[j - 1], i) * SmoothExpr::var(n + j);
      comps.push_back(acc);
    }
    return Morphism(n + m, std::move(comps));
  }

  /// Sampled equality; on mismatch lhs/rhs are the values at the worst point.
  Comparison compare(const Morphism& f, const Morphism& g) const {
    const auto r = smooth_equal(f, g, equality);
    if (r.equal) return {};
    if (r.used == 0) return {false, show(f), show(g), "no sample point gave finite values on both sides"};
    return {false, detail::format_vector(r.lhs_at_worst), detail::format_vector(r.rhs_at_worst),
            "deviation " + detail::format_double(r.worst_deviation) + " at x = " +
                detail::format_vector(r.worst_point)};
  }

  std::string show(const Morphism& f) const { return to_string(f); }

  Morphism parse(std::string_view text) const { return parse_smooth_morphism(text); }

  /// Random expressions of depth at most caps.max_depth.
  Morphism generate(Rng& rng, std::size_t dom, std::size_t cod, const GeneratorCaps& caps) const {
    std::vector<SmoothExpr> comps;
    for (std::size_t j = 0; j < cod; ++j) comps.push_back(random_expr(rng, dom, caps.max_depth));
    return Morphism(dom, std::move(comps));
  }

  /// Each component is sum_i c_i x_i with c_i in {-1, -3/4, ..., 1}.
  Morphism generate_linear(Rng& rng, std::size_t dom, std::size_t cod, const GeneratorCaps&) const {
    std::vector<SmoothExpr> comps;
    for (std::size_t j = 0; j < cod; ++j) {
      SmoothExpr acc = SmoothExpr::constant(0.0);
      for (std::size_t i = 1; i <= dom; ++i) acc = acc + random_coefficient(rng) * SmoothExpr::var(i);
      comps.push_back(acc);
    }
    return Morphism(dom, std::move(comps));
  }

 private:
  static SmoothExpr random_coefficient(Rng& rng) {
    return SmoothExpr::constant(static_cast<double>(static_cast<int>(rng.below(9)) - 4) / 4.0);
  }

  static SmoothExpr random_expr(Rng& rng, std::size_t dom, std::size_t depth) {
    if (depth == 0 || rng.chance(1, 4)) {
      if (dom == 0 || rng.chance(1, 4)) return random_coefficient(rng);
      return SmoothExpr::var(1 + rng.below(dom));
    }
    switch (rng.below(6)) {
      case 0: return random_expr(rng, dom, depth - 1) + random_expr(rng, dom, depth - 1);
      case 1: return random_expr(rng, dom, depth - 1) * random_expr(rng, dom, depth - 1);
      case 2: return -random_expr(rng, dom, depth - 1);
      case 3: return SmoothExpr::sin(random_expr(rng, dom, depth - 1));
      case 4: return SmoothExpr::cos(random_expr(rng, dom, depth - 1));
      default: return SmoothExpr::exp(random_expr(rng, dom, depth - 1));
    }
  }
};

/// Twenty hand-built morphisms of arity at most three mixing sin, cos, exp,
/// products and sums. Used as the primary pool for Smooth checks.
inline std::vector<SmoothMorphism> smooth_reference_pool() {
  static const char* const literals[] = {
      "smooth(1->1){ sin(x1) }",
      "smooth(1->1){ exp(x1)*cos(x1) }",
      "smooth(2->1){ sin(x1) + x2 }",
      "smooth(2->1){ x1*x2 }",
      "smooth(2->2){ sin(x1*x2) ; exp(x1) + cos(x2) }",
      "smooth(3->1){ x1*x2*x3 + sin(x3) }",
      "smooth(3->2){ exp(x1*x2) ; cos(x2 + x3)*x1 }",
      "smooth(1->2){ cos(x1) ; x1*x1*x1 }",
      "smooth(2->3){ x1 + x2 ; sin(x1)*cos(x2) ; exp(-x1) }",
      "smooth(3->3){ sin(x1)*x2 ; cos(x3)*exp(x2) ; x1*x2 + x3 }",
      "smooth(1->1){ sin(cos(x1)) }",
      "smooth(1->1){ exp(sin(x1))*x1 }",
      "smooth(2->1){ cos(x1*x1 + x2*x2) }",
      "smooth(2->2){ x1*exp(x2) ; x2*sin(x1) }",
      "smooth(3->1){ exp(x1)*sin(x2)*cos(x3) }",
      "smooth(1->3){ x1 ; sin(2*x1) ; exp(x1)*x1 }",
      "smooth(2->1){ 3*x1*x1 - 2*x2 + 0.5 }",
      "smooth(3->2){ sin(x1 + x2 + x3) ; x1*cos(x2)*exp(x3) }",
      "smooth(2->2){ cos(exp(x1)) ; sin(x2)*sin(x2) }",
      "smooth(3->3){ x2*x3 ; x1*x3 ; x1*x2 }",
  };
  std::vector<SmoothMorphism> pool;
  for (const char* text : literals) pool.push_back(parse_smooth_morphism(text));
  return pool;
}

}  // namespace rdcat
