#include <catch2/catch_amalgamated.hpp>

#include "rdcat/fibration.hpp"
#include "rdcat/poly_category.hpp"

using namespace rdcat;

namespace {

const PolyCategory<IntRig> poly{};

PolyMorphism<IntRig> P(std::string_view text) { return poly.parse(text); }

}  // namespace

TEST_CASE("reverse functor on a small composite", "[fibration]") {
  const auto f = P("poly(1->1){ x1^2 }");
  const auto g = P("poly(1->1){ 3*x1 + 1 }");
  const auto composite = linfib_compose(poly, reverse_functor(poly, f), reverse_functor(poly, g));
  // R[f g](x, y) = 2 x * 3 y.
  CHECK(poly.show(composite.fiber) == "poly(2->1){ 6*x1*x2 }");
  CHECK(poly.show(composite.base) == "poly(1->1){ 3*x1^2 + 1 }");
  CHECK(linfib_compare(poly, composite, reverse_functor(poly, poly.compose(f, g))).equal);
}

TEST_CASE("fibration maps check their fibers", "[fibration]") {
  const auto d = native_forward(poly);
  const auto base = P("poly(1->1){ x1 }");
  const auto fiber = P("poly(2->1){ x1*x2 }");
  const auto m = make_linfib(poly, base, fiber, d);
  CHECK(m.split == Split{1, 1});
  CHECK(m.source_fiber() == 1);
  CHECK(m.target_fiber() == 1);
  CHECK_THROWS_AS(make_linfib(poly, base, P("poly(2->1){ x2^2 }"), d), LinearityViolation);
  CHECK_THROWS_AS(make_linfib(poly, base, P("poly(2->1){ x1 + x2 }"), d), LinearityViolation);
  CHECK_THROWS_AS(make_linfib(poly, P("poly(2->1){ x1 }"), P("poly(1->1){ x1 }"), d), SignatureError);
}

TEST_CASE("identity and composition", "[fibration][property]") {
  Rng rng(53);
  const GeneratorCaps caps{};
  for (int n = 0; n < 100; ++n) {
    const std::size_t a = 1 + rng.below(2), b = 1 + rng.below(2), c = 1 + rng.below(2);
    const auto f = poly.generate(rng, a, b, caps);
    const auto g = poly.generate(rng, b, c, caps);
    const auto rf = reverse_functor(poly, f);
    const auto rg = reverse_functor(poly, g);
    CHECK(linfib_compare(poly, linfib_compose(poly, rf, rg), reverse_functor(poly, poly.compose(f, g))).equal);
    CHECK(linfib_compare(poly, linfib_compose(poly, linfib_identity(poly, a, a), rf), rf).equal);
    CHECK(linfib_compare(poly, linfib_compose(poly, rf, linfib_identity(poly, b, b)), rf).equal);
    CHECK(linfib_compare(poly, reverse_functor(poly, poly.identity(a)), linfib_identity(poly, a, a)).equal);
  }
  CHECK_THROWS_AS(linfib_compose(poly, linfib_identity(poly, 1, 1), linfib_identity(poly, 2, 2)), SignatureError);
}

TEST_CASE("contextual dagger is a functor from the simple fibration", "[fibration][property]") {
  Rng rng(59);
  const GeneratorCaps caps{};
  for (int n = 0; n < 100; ++n) {
    const std::size_t i = 1 + rng.below(2), j = 1 + rng.below(2), k = 1 + rng.below(2);
    const std::size_t a = 1 + rng.below(2), b = 1 + rng.below(2), c = 1 + rng.below(2);
    // Fibers linear in their second argument: c-weighted linear maps x1 * L.
    auto fiber = [&](std::size_t ctx, std::size_t in, std::size_t out) {
      const auto lin = poly.generate_linear(rng, in, out, caps);
      const auto weight = poly.generate(rng, ctx, 1, caps);
      std::vector<Polynomial<IntRig>> comps;
      for (std::size_t q = 0; q < out; ++q) {
        std::vector<Polynomial<IntRig>> args;
        for (std::size_t v = 1; v <= in; ++v) args.push_back(poly.var(ctx + in, ctx + v));
        const auto w = weight[0].with_nvars(ctx + in);
        comps.push_back(w * poly_substitute(lin[q], args));
      }
      return PolyMorphism<IntRig>(IntRig{}, ctx + in, comps);
    };
    const SimpleLinMorphism<PolyMorphism<IntRig>> m1{poly.generate(rng, i, j, caps), fiber(i, a, b), Split{i, a}};
    const SimpleLinMorphism<PolyMorphism<IntRig>> m2{poly.generate(rng, j, k, caps), fiber(j, b, c), Split{j, b}};
    const auto lhs = dagger_functor(poly, simple_compose(poly, m1, m2));
    const auto rhs = linfib_compose(poly, dagger_functor(poly, m1), dagger_functor(poly, m2));
    CHECK(linfib_compare(poly, lhs, rhs).equal);
  }
}
