#pragma once

// Concrete presentations of two fibrations over a category X.
//
// Dual linear fibration: objects (I, A); a map (I, A) -> (J, B) is a pair
// (f: I -> J, g: I x B -> A) with g linear in B. The reverse derivative is a
// functor into it, f |-> (f, R[f]).
//
// Simple linear fibration: same objects; a map (I, A) -> (J, B) is a pair
// (f: I -> J, g: I x A -> B) with g linear in A. The contextual dagger sends
// it to the dual, (f, g) |-> (f, g-dagger[I]).

#include <string>
#include <utility>

#include "rdcat/combinators.hpp"

namespace rdcat {

template <class M>
struct LinFibMorphism {
  M base;   // I -> J
  M fiber;  // I x B -> A
  Split split;  // (I, B)

  std::size_t source_base() const { return base.dom(); }
  std::size_t target_base() const { return base.cod(); }
  std::size_t source_fiber() const { return fiber.cod(); }   // A
  std::size_t target_fiber() const { return split.right; }  // B
};

namespace detail {

template <class M>
Split fiber_split(const M& base, const M& fiber) {
  if (fiber.dom() < base.dom()) {
    throw SignatureError("fiber " + signature(fiber) + " cannot take the base object of " + signature(base) +
                         " as its context");
  }
  return Split{base.dom(), fiber.dom() - base.dom()};
}

}  // namespace detail

/// Builds (base, fiber) after checking that the fiber is linear in its
/// second argument. `d` is the forward derivative used for the check.
template <CartesianLeftAdditive C, class Forward>
LinFibMorphism<MorphismOf<C>> make_linfib(const C& c, MorphismOf<C> base, MorphismOf<C> fiber, Forward&& d) {
  const Split s = detail::fiber_split(base, fiber);
  if (const auto cmp = linear_in_second_comparison(c, fiber, s, std::forward<Forward>(d)); !cmp) {
    throw LinearityViolation("fiber " + c.show(fiber) + " is not linear in its second argument (" + cmp.detail +
                             ")");
  }
  return {std::move(base), std::move(fiber), s};
}

/// (1, pi1): (I, A) -> (I, A).
template <CartesianLeftAdditive C>
LinFibMorphism<MorphismOf<C>> linfib_identity(const C& c, std::size_t i, std::size_t a) {
  return {c.identity(i), pi1(c, i, a), Split{i, a}};
}

/// (f, g) then (f', g') = (f f', <pi0, <pi0 f, pi1>> (1 x g') g).
///
///   <pi0, <pi0 f, pi1>> : I x C -> I x (J x C)
///   1 x g'              : I x (J x C) -> I x B
///   g                   : I x B -> A
///
/// Both inputs are already linear in their fibers and the composite is by
/// construction, so the result is not re-validated.
template <CartesianLeftAdditive C>
LinFibMorphism<MorphismOf<C>> linfib_compose(const C& c, const LinFibMorphism<MorphismOf<C>>& first,
                                             const LinFibMorphism<MorphismOf<C>>& second) {
  if (first.target_base() != second.source_base() || first.target_fiber() != second.source_fiber()) {
    throw SignatureError("fibration maps do not compose: (" + std::to_string(first.target_base()) + ", " +
                         std::to_string(first.target_fiber()) + ") vs (" + std::to_string(second.source_base()) +
                         ", " + std::to_string(second.source_fiber()) + ")");
  }
  const std::size_t i = first.source_base();
  const std::size_t cc = second.target_fiber();
  auto fiber = seq(c, chain_context(c, first.base, cc), product(c, c.identity(i), second.fiber), first.fiber);
  return {c.compose(first.base, second.base), std::move(fiber), Split{i, cc}};
}

/// f |-> (f, R[f]): (A, A) -> (B, B).
template <ReverseDifferential C>
LinFibMorphism<MorphismOf<C>> reverse_functor(const C& c, const MorphismOf<C>& f) {
  return {f, c.reverse(f), Split{f.dom(), f.cod()}};
}

template <CartesianLeftAdditive C>
Comparison linfib_compare(const C& c, const LinFibMorphism<MorphismOf<C>>& x, const LinFibMorphism<MorphismOf<C>>& y) {
  if (x.split != y.split) {
    return {false, "split " + signature(x.split.left, x.split.right), "split " + signature(y.split.left, y.split.right),
            "fiber splits differ"};
  }
  if (auto b = c.compare(x.base, y.base); !b) {
    b.detail = "base: " + b.detail;
    return b;
  }
  auto g = c.compare(x.fiber, y.fiber);
  if (!g) g.detail = "fiber: " + g.detail;
  return g;
}

/// A map (I, A) -> (J, B) of the simple fibration: (f: I -> J, g: I x A -> B).
template <class M>
struct SimpleLinMorphism {
  M base;
  M fiber;
  Split split;  // (I, A)
};

/// (f, g) then (f', g') = (f f', <pi0 f, g> g').
template <CartesianLeftAdditive C>
SimpleLinMorphism<MorphismOf<C>> simple_compose(const C& c, const SimpleLinMorphism<MorphismOf<C>>& first,
                                                const SimpleLinMorphism<MorphismOf<C>>& second) {
  const std::size_t i = first.split.left;
  const std::size_t a = first.split.right;
  auto fiber = c.compose(c.pair(c.compose(pi0(c, i, a), first.base), first.fiber), second.fiber);
  return {c.compose(first.base, second.base), std::move(fiber), first.split};
}

/// (f, g) |-> (f, g-dagger[I]) from the simple linear fibration to its dual.
template <ReverseDifferential C>
LinFibMorphism<MorphismOf<C>> dagger_functor(const C& c, const SimpleLinMorphism<MorphismOf<C>>& m) {
  return {m.base, contextual_dagger(c, m.fiber, m.split), Split{m.split.left, m.fiber.cod()}};
}

}  // namespace rdcat
