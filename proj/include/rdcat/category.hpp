#pragma once

// Shared Cartesian left additive structure. Objects are arities and the
// product of objects is the sum of arities. Each concrete category supplies
// the primitives in the CartesianLeftAdditive concept; everything else in
// this header is built from those primitives once.
//
// Composition is diagrammatic throughout: compose(f, g) is "f, then g".

#include <concepts>
#include <cstddef>
#include <string>
#include <utility>

#include "rdcat/error.hpp"
#include "rdcat/fault.hpp"
#include "rdcat/random.hpp"

namespace rdcat {

/// How an object of arity left + right is read as a product A x B.
struct Split {
  std::size_t left = 0;
  std::size_t right = 0;

  std::size_t total() const { return left + right; }
  bool operator==(const Split&) const = default;
};

enum class Side { left = 0, right = 1 };

/// Result of a category's equality oracle. When the sides differ, lhs and rhs
/// hold their canonical forms (or sampled values) and detail says where.
struct Comparison {
  bool equal = true;
  std::string lhs;
  std::string rhs;
  std::string detail;

  explicit operator bool() const { return equal; }
};

/// Size limits for random morphism generation.
struct GeneratorCaps {
  std::size_t max_arity = 3;
  std::size_t max_degree = 3;
  std::size_t max_terms = 5;
  std::size_t max_depth = 3;
};

inline std::string signature(std::size_t dom, std::size_t cod) {
  return std::to_string(dom) + "->" + std::to_string(cod);
}

template <class M>
std::string signature(const M& f) {
  return signature(f.dom(), f.cod());
}

template <class C>
concept CartesianLeftAdditive =
    requires(const C& c, const typename C::Morphism& f, std::size_t n, Split s, Side side) {
      typename C::Morphism;
      { f.dom() } -> std::convertible_to<std::size_t>;
      { f.cod() } -> std::convertible_to<std::size_t>;
      { c.identity(n) } -> std::same_as<typename C::Morphism>;
      { c.compose(f, f) } -> std::same_as<typename C::Morphism>;
      { c.pair(f, f) } -> std::same_as<typename C::Morphism>;
      { c.projection(s, side) } -> std::same_as<typename C::Morphism>;
      { c.add(f, f) } -> std::same_as<typename C::Morphism>;
      { c.zero(n, n) } -> std::same_as<typename C::Morphism>;
      { c.bang(n) } -> std::same_as<typename C::Morphism>;
      { c.compare(f, f) } -> std::same_as<Comparison>;
      { c.show(f) } -> std::same_as<std::string>;
      { c.name() } -> std::same_as<std::string>;
      { c.fault } -> std::convertible_to<Fault>;
    };

/// Category with a native forward differential combinator D[f]: A x A -> B.
template <class C>
concept ForwardDifferential = CartesianLeftAdditive<C> && requires(const C& c, const typename C::Morphism& f) {
  { c.forward(f) } -> std::same_as<typename C::Morphism>;
};

/// Category with a reverse differential combinator R[f]: A x B -> A.
template <class C>
concept ReverseDifferential = CartesianLeftAdditive<C> && requires(const C& c, const typename C::Morphism& f) {
  { c.reverse(f) } -> std::same_as<typename C::Morphism>;
};

/// Category that can produce random morphisms for property checks.
template <class C>
concept Generating =
    CartesianLeftAdditive<C> && requires(const C& c, Rng& rng, std::size_t n, const GeneratorCaps& caps) {
      { c.generate(rng, n, n, caps) } -> std::same_as<typename C::Morphism>;
      { c.generate_linear(rng, n, n, caps) } -> std::same_as<typename C::Morphism>;
    };

template <class C>
using MorphismOf = typename C::Morphism;

template <class M>
void require_composable(const M& f, const M& g) {
  if (f.cod() != g.dom()) {
    throw SignatureError("cannot compose " + signature(f) + " with " + signature(g));
  }
}

template <class M>
void require_same_signature(const M& f, const M& g, const char* what) {
  if (f.dom() != g.dom() || f.cod() != g.cod()) {
    throw SignatureError(std::string(what) + ": " + signature(f) + " vs " + signature(g));
  }
}

// Shorthands. Each projection/injection names its split explicitly.

template <CartesianLeftAdditive C>
MorphismOf<C> pi0(const C& c, std::size_t a, std::size_t b) {
  return c.projection(Split{a, b}, Side::left);
}

template <CartesianLeftAdditive C>
MorphismOf<C> pi1(const C& c, std::size_t a, std::size_t b) {
  return c.projection(Split{a, b}, Side::right);
}

/// f1 f2 ... fn in diagrammatic order.
template <CartesianLeftAdditive C, class... Ms>
MorphismOf<C> seq(const C& c, const MorphismOf<C>& f, const MorphismOf<C>& g, const Ms&... rest) {
  if constexpr (sizeof...(rest) == 0) {
    return c.compose(f, g);
  } else {
    return seq(c, c.compose(f, g), rest...);
  }
}

/// iota0 = <1, 0>: A -> A x B and iota1 = <0, 1>: B -> A x B.
template <CartesianLeftAdditive C>
MorphismOf<C> injection(const C& c, Split s, Side side) {
  if (side == Side::left) return c.pair(c.identity(s.left), c.zero(s.left, s.right));
  return c.pair(c.zero(s.right, s.left), c.identity(s.right));
}

template <CartesianLeftAdditive C>
MorphismOf<C> iota0(const C& c, std::size_t a, std::size_t b) {
  return injection(c, Split{a, b}, Side::left);
}

template <CartesianLeftAdditive C>
MorphismOf<C> iota1(const C& c, std::size_t a, std::size_t b) {
  return injection(c, Split{a, b}, Side::right);
}

/// f x g = <pi0 f, pi1 g>: A x B -> C x D for f: A -> C, g: B -> D.
template <CartesianLeftAdditive C>
MorphismOf<C> product(const C& c, const MorphismOf<C>& f, const MorphismOf<C>& g) {
  const Split s{f.dom(), g.dom()};
  return c.pair(c.compose(c.projection(s, Side::left), f), c.compose(c.projection(s, Side::right), g));
}

/// <f|g> = pi0 f + pi1 g: A x B -> C for f: A -> C, g: B -> C.
template <CartesianLeftAdditive C>
MorphismOf<C> copair(const C& c, const MorphismOf<C>& f, const MorphismOf<C>& g) {
  if (f.cod() != g.cod()) throw SignatureError("copair codomains differ: " + signature(f) + " vs " + signature(g));
  return c.add(c.compose(pi0(c, f.dom(), g.dom()), f), c.compose(pi1(c, f.dom(), g.dom()), g));
}

/// h (+) k = <h iota0 | k iota1>: A x B -> C x D.
template <CartesianLeftAdditive C>
MorphismOf<C> oplus(const C& c, const MorphismOf<C>& h, const MorphismOf<C>& k) {
  return copair(c, c.compose(h, iota0(c, h.cod(), k.cod())), c.compose(k, iota1(c, h.cod(), k.cod())));
}

/// ex = <pi0 x pi0, pi1 x pi1>: (A x B) x (C x D) -> (A x C) x (B x D).
template <CartesianLeftAdditive C>
MorphismOf<C> exchange(const C& c, std::size_t a, std::size_t b, std::size_t cc, std::size_t d) {
  if (c.fault == Fault::exchange_swaps_splits && cc == d) {
    // Pairs A with D and B with C; well-typed only because C = D.
    return c.pair(product(c, pi0(c, a, b), pi1(c, cc, d)), product(c, pi1(c, a, b), pi0(c, cc, d)));
  }
  return c.pair(product(c, pi0(c, a, b), pi0(c, cc, d)), product(c, pi1(c, a, b), pi1(c, cc, d)));
}

}  // namespace rdcat
