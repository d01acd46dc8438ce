#pragma once

// POLY_R: objects are arities, a morphism n -> m is an m-tuple of polynomials
// in n variables. Equality is exact (canonical forms).
//
// Variable convention for derivatives: x1..xn are the point, the following
// block (x(n+1).. ) is the tangent vector (D) or covector (R).

#include <string>
#include <utility>
#include <vector>

#include "rdcat/category.hpp"
#include "rdcat/literal.hpp"
#include "rdcat/polynomial.hpp"

namespace rdcat {

template <Rig R>
class PolyMorphism {
 public:
  PolyMorphism(R rig, std::size_t dom, std::vector<Polynomial<R>> components)
      : rig_(std::move(rig)), dom_(dom), components_(std::move(components)) {
    for (auto& p : components_) {
      detail::require_same_rig(rig_, p.rig());
      if (p.nvars() != dom_) p = p.with_nvars(dom_);
    }
  }

  std::size_t dom() const { return dom_; }
  std::size_t cod() const { return components_.size(); }
  const R& rig() const { return rig_; }
  const std::vector<Polynomial<R>>& components() const { return components_; }
  const Polynomial<R>& operator[](std::size_t j) const { return components_[j]; }

  bool operator==(const PolyMorphism& o) const {
    return rig_ == o.rig_ && dom_ == o.dom_ && components_ == o.components_;
  }

 private:
  R rig_;
  std::size_t dom_;
  std::vector<Polynomial<R>> components_;
};

template <Rig R>
std::string to_string(const PolyMorphism<R>& f) {
  std::vector<std::string> items;
  items.reserve(f.cod());
  for (const auto& p : f.components()) items.push_back(to_string(p));
  return "poly(" + signature(f) + ")" + literal_body(items);
}

template <Rig R>
PolyMorphism<R> parse_poly_morphism(Cursor& in, const R& rig) {
  const auto h = read_literal_header(in, "poly");
  std::vector<Polynomial<R>> comps;
  read_literal_body(in, h, h.cod, [&](std::size_t) { comps.push_back(parse_polynomial(in, rig, h.dom)); });
  return PolyMorphism<R>(rig, h.dom, std::move(comps));
}

/// Parses `poly(n->m){ p1 ; ... ; pm }`.
template <Rig R>
PolyMorphism<R> parse_poly_morphism(const R& rig, std::string_view text) {
  Cursor in(text);
  auto f = parse_poly_morphism(in, rig);
  if (!in.at_end()) in.fail("unexpected trailing input");
  return f;
}

template <Rig R>
struct PolyCategory {
  using Morphism = PolyMorphism<R>;

  R rig{};
  Fault fault = Fault::none;

  std::string name() const { return "poly"; }

  Polynomial<R> var(std::size_t nvars, std::size_t i) const { return Polynomial<R>::variable(rig, nvars, i); }
  Polynomial<R> zero_poly(std::size_t nvars) const { return Polynomial<R>(rig, nvars); }

  Morphism identity(std::size_t n) const {
    std::vector<Polynomial<R>> comps;
    for (std::size_t i = 1; i <= n; ++i) comps.push_back(var(n, i));
    return Morphism(rig, n, std::move(comps));
  }

  Morphism compose(const Morphism& f, const Morphism& g) const {
    require_composable(f, g);
    std::vector<Polynomial<R>> comps;
    comps.reserve(g.cod());
    for (const auto& q : g.components()) comps.push_back(poly_substitute(q, f.components()).with_nvars(f.dom()));
    return Morphism(rig, f.dom(), std::move(comps));
  }

  Morphism pair(const Morphism& f, const Morphism& g) const {
    if (f.dom() != g.dom()) throw SignatureError("pairing domains differ: " + signature(f) + " vs " + signature(g));
    auto comps = f.components();
    comps.insert(comps.end(), g.components().begin(), g.components().end());
    return Morphism(rig, f.dom(), std::move(comps));
  }

  Morphism projection(Split s, Side side) const {
    std::vector<Polynomial<R>> comps;
    const std::size_t first = side == Side::left ? 1 : s.left + 1;
    const std::size_t count = side == Side::left ? s.left : s.right;
    for (std::size_t i = 0; i < count; ++i) comps.push_back(var(s.total(), first + i));
    return Morphism(rig, s.total(), std::move(comps));
  }

  Morphism add(const Morphism& f, const Morphism& g) const {
    require_same_signature(f, g, "sum of morphisms with different signatures");
    std::vector<Polynomial<R>> comps;
    for (std::size_t j = 0; j < f.cod(); ++j) comps.push_back(poly_add(f[j], g[j]));
    return Morphism(rig, f.dom(), std::move(comps));
  }

  Morphism zero(std::size_t a, std::size_t b) const {
    return Morphism(rig, a, std::vector<Polynomial<R>>(b, zero_poly(a)));
  }

  Morphism bang(std::size_t a) const { return zero(a, 0); }

  Polynomial<R> partial(const Polynomial<R>& p, std::size_t i) const {
    return detail::partial_impl(p, i, fault != Fault::partial_drops_scale);
  }

  /// D[f](x, v) = sum_i (d f / d x_i)(x) v_i, with v_i = x(n+i).
  Morphism forward(const Morphism& f) const {
    const std::size_t n = f.dom();
    std::vector<Polynomial<R>> comps;
    for (const auto& p : f.components()) {
      Polynomial<R> acc = zero_poly(2 * n);
      for (std::size_t i = 1; i <= n; ++i) {
        acc = poly_add(acc, poly_mul(partial(p, i).with_nvars(2 * n), var(2 * n, n + i)));
      }
      comps.push_back(std::move(acc));
    }
    return Morphism(rig, 2 * n, std::move(comps));
  }

  /// R[f](x, y)_i = sum_j (d f_j / d x_i)(x) y_j, with y_j = x(n+j).
  Morphism reverse(const Morphism& f) const {
    const std::size_t n = f.dom();
    const std::size_t m = f.cod();
    std::vector<Polynomial<R>> comps;
    for (std::size_t i = 1; i <= n; ++i) {
      Polynomial<R> acc = zero_poly(n + m);
      for (std::size_t j = 1; j <= m; ++j) {
        acc = poly_add(acc, poly_mul(partial(f[j - 1], i).with_nvars(n + m), var(n + m, n + j)));
      }
      comps.push_back(std::move(acc));
    }
    return Morphism(rig, n + m, std::move(comps));
  }

  Comparison compare(const Morphism& f, const Morphism& g) const {
    if (f == g) return {};
    return {false, show(f), show(g), "canonical forms differ"};
  }

  std::string show(const Morphism& f) const { return to_string(f); }

  Morphism parse(std::string_view text) const { return parse_poly_morphism(rig, text); }

  /// Up to caps.max_terms terms per component, each of total degree at most
  /// caps.max_degree, coefficients drawn by the rig's sampler.
  Morphism generate(Rng& rng, std::size_t dom, std::size_t cod, const GeneratorCaps& caps) const {
    std::vector<Polynomial<R>> comps;
    for (std::size_t j = 0; j < cod; ++j) {
      Polynomial<R> p = zero_poly(dom);
      const std::size_t nterms = rng.below(caps.max_terms + 1);
      for (std::size_t t = 0; t < nterms; ++t) {
        Monomial m(dom, 0);
        if (dom > 0) {
          const std::size_t degree = rng.below(caps.max_degree + 1);
          for (std::size_t d = 0; d < degree; ++d) ++m[rng.below(dom)];
        }
        p.accumulate(std::move(m), rig.sample(rng));
      }
      comps.push_back(std::move(p));
    }
    return Morphism(rig, dom, std::move(comps));
  }

  /// Each component is sum_i r_i x_i.
  Morphism generate_linear(Rng& rng, std::size_t dom, std::size_t cod, const GeneratorCaps&) const {
    std::vector<Polynomial<R>> comps;
    for (std::size_t j = 0; j < cod; ++j) {
      Polynomial<R> p = zero_poly(dom);
      for (std::size_t i = 0; i < dom; ++i) {
        Monomial m(i + 1, 0);
        m[i] = 1;
        p.accumulate(std::move(m), rig.sample(rng));
      }
      comps.push_back(std::move(p));
    }
    return Morphism(rig, dom, std::move(comps));
  }
};

}  // namespace rdcat
