#pragma once

// Constructions derived from the structure maps plus D or R, written once for
// every category. Each function lists the splits it uses; getting one of them
// wrong silently re-associates a product, so the tables are the reference the
// unit tests pin down.
//
// Forward derivatives are passed as a callable `d(f) -> D[f]` so the same
// formula can run against a native D or the one induced from R.

#include <utility>

#include "rdcat/category.hpp"

namespace rdcat {

/// Native forward derivative of a category, as a callable.
template <ForwardDifferential C>
auto native_forward(const C& c) {
  return [&c](const MorphismOf<C>& f) { return c.forward(f); };
}

/// D[f] = (iota0 x 1) R[R[f]] pi1 for f: A -> B.
///
///   iota0      : A -> A x B                 split (A, B)
///   iota0 x 1  : A x A -> (A x B) x A       splits (A, A) -> (A x B, A)
///   R[R[f]]    : (A x B) x A -> A x B
///   pi1        : A x B -> B                 split (A, B)
template <ReverseDifferential C>
MorphismOf<C> forward_from_reverse(const C& c, const MorphismOf<C>& f) {
  const std::size_t a = f.dom();
  const std::size_t b = f.cod();
  return seq(c, product(c, iota0(c, a, b), c.identity(a)), c.reverse(c.reverse(f)), pi1(c, a, b));
}

/// Forward derivative induced from R, as a callable.
template <ReverseDifferential C>
auto derived_forward(const C& c) {
  return [&c](const MorphismOf<C>& f) { return forward_from_reverse(c, f); };
}

/// f-dagger = iota1 R[f]: B -> A for f: A -> B.
///
///   iota1  : B -> A x B                     split (A, B)
///   R[f]   : A x B -> A
template <ReverseDifferential C>
MorphismOf<C> dagger(const C& c, const MorphismOf<C>& f) {
  return c.compose(iota1(c, f.dom(), f.cod()), c.reverse(f));
}

/// Contextual dagger of f: C x A -> B, giving C x B -> A.
///
///   iota0      : C -> C x A                 split (C, A)
///   iota0 x 1  : C x B -> (C x A) x B
///   R[f]       : (C x A) x B -> C x A
///   pi1        : C x A -> A                 split (C, A)
template <ReverseDifferential C>
MorphismOf<C> contextual_dagger(const C& c, const MorphismOf<C>& f, Split s) {
  if (f.dom() != s.total()) {
    throw SignatureError("contextual dagger split " + signature(s.left, s.right) + " does not match " + signature(f));
  }
  const std::size_t b = f.cod();
  const auto inject = c.fault == Fault::ctx_dagger_drops_injection ? c.zero(s.left, s.total())
                                                                    : iota0(c, s.left, s.right);
  return seq(c, product(c, inject, c.identity(b)), c.reverse(f), pi1(c, s.left, s.right));
}

/// Contextual dagger induced from R, as a callable `(g, split) -> g-dagger[C]`.
template <ReverseDifferential C>
auto induced_contextual_dagger(const C& c) {
  return [&c](const MorphismOf<C>& g, Split s) { return contextual_dagger(c, g, s); };
}

/// R[f] = D[f]-dagger[A] for f: A -> B, where D[f]: A x A -> B is read with
/// context A, split (A, A). `d` computes D, `ctx` the contextual dagger.
template <CartesianLeftAdditive C, class Forward, class ContextDagger>
MorphismOf<C> reverse_from_forward_dagger(const C&, const MorphismOf<C>& f, Forward&& d, ContextDagger&& ctx) {
  return ctx(d(f), Split{f.dom(), f.dom()});
}

/// D_B[f] for f: A x B -> C, giving A x (B x B) -> C.
///
///   1 x pi0     : A x (B x B) -> A x B      pi0 split (B, B)
///   0 x pi1     : A x (B x B) -> A x B      0: A -> A, pi1 split (B, B)
///   <-, ->      : A x (B x B) -> (A x B) x (A x B)
///   D[f]        : (A x B) x (A x B) -> C
template <CartesianLeftAdditive C, class Forward>
MorphismOf<C> partial_derivative(const C& c, const MorphismOf<C>& f, Split s, Forward&& d) {
  if (f.dom() != s.total()) {
    throw SignatureError("partial derivative split " + signature(s.left, s.right) + " does not match " + signature(f));
  }
  const std::size_t a = s.left;
  const std::size_t b = s.right;
  const auto lhs = product(c, c.identity(a), pi0(c, b, b));
  const auto rhs = product(c, c.zero(a, a), pi1(c, b, b));
  return c.compose(c.pair(lhs, rhs), d(f));
}

/// D[f] = pi1 f, with pi1 split (A, A).
template <CartesianLeftAdditive C, class Forward>
Comparison linear_comparison(const C& c, const MorphismOf<C>& f, Forward&& d) {
  return c.compare(d(f), c.compose(pi1(c, f.dom(), f.dom()), f));
}

template <CartesianLeftAdditive C, class Forward>
bool is_linear(const C& c, const MorphismOf<C>& f, Forward&& d) {
  return linear_comparison(c, f, std::forward<Forward>(d)).equal;
}

/// (iota0 x iota1) D[f] = f for f: A x B -> C.
///
///   iota0 x iota1 : A x B -> (A x B) x (A x B)   both injections split (A, B)
template <CartesianLeftAdditive C, class Forward>
Comparison linear_in_second_comparison(const C& c, const MorphismOf<C>& f, Split s, Forward&& d) {
  if (f.dom() != s.total()) {
    throw SignatureError("linearity split " + signature(s.left, s.right) + " does not match " + signature(f));
  }
  const auto inject = product(c, iota0(c, s.left, s.right), iota1(c, s.left, s.right));
  return c.compare(c.compose(inject, d(f)), f);
}

template <CartesianLeftAdditive C, class Forward>
bool is_linear_in_second(const C& c, const MorphismOf<C>& f, Split s, Forward&& d) {
  return linear_in_second_comparison(c, f, s, std::forward<Forward>(d)).equal;
}

/// <pi0, <pi0 f, pi1>>: A x X -> A x (B x X) for f: A -> B. This is the
/// reindexing step of the reverse chain rule and of fibration composition.
template <CartesianLeftAdditive C>
MorphismOf<C> chain_context(const C& c, const MorphismOf<C>& f, std::size_t x) {
  const std::size_t a = f.dom();
  const auto base = c.fault == Fault::chain_drops_base_term ? c.zero(a + x, f.cod())
                                                              : c.compose(pi0(c, a, x), f);
  return c.pair(pi0(c, a, x), c.pair(base, pi1(c, a, x)));
}

}  // namespace rdcat
