#include <catch2/catch_amalgamated.hpp>

#include "rdcat/combinators.hpp"
#include "rdcat/mat_category.hpp"
#include "rdcat/poly_category.hpp"
#include "rdcat/smooth_category.hpp"

using namespace rdcat;

namespace {

const PolyCategory<IntRig> poly{};

PolyMorphism<IntRig> P(std::string_view text) { return poly.parse(text); }

}  // namespace

TEST_CASE("forward derivative induced from the reverse one", "[combinators]") {
  CHECK(poly.show(forward_from_reverse(poly, P("poly(1->1){ x1^3 }"))) == "poly(2->1){ 3*x1^2*x2 }");
  const auto p = P("poly(2->1){ x1^2 + 3*x1*x2 + 5*x2 }");
  CHECK(forward_from_reverse(poly, p) == poly.forward(p));
}

TEST_CASE("dagger of a linear map", "[combinators]") {
  const auto p = P("poly(2->1){ 2*x1 + 3*x2 }");
  const auto pd = dagger(poly, p);
  CHECK(poly.show(pd) == "poly(1->2){ 2*x1 ; 3*x1 }");
  CHECK(dagger(poly, pd) == p);
  CHECK(is_linear(poly, p, native_forward(poly)));
  CHECK_FALSE(is_linear(poly, P("poly(1->1){ x1^2 }"), native_forward(poly)));
  CHECK_FALSE(is_linear(poly, P("poly(1->1){ x1 + 1 }"), native_forward(poly)));
}

TEST_CASE("contextual dagger", "[combinators]") {
  // c * a is linear in a; its dagger in context c is c * b.
  const auto ca = P("poly(2->1){ x1*x2 }");
  CHECK(poly.show(contextual_dagger(poly, ca, Split{1, 1})) == "poly(2->1){ x1*x2 }");
  // With an empty context it is the ordinary dagger.
  const auto lin = P("poly(2->2){ x1 + 2*x2 ; 3*x1 }");
  CHECK(contextual_dagger(poly, lin, Split{0, 2}) == dagger(poly, lin));
  // <c^2 a1 + a2, c a1> with context c: the transpose of [[c^2, c], [1, 0]].
  const auto g = P("poly(3->2){ x1^2*x2 + x3 ; x1*x2 }");
  CHECK(poly.show(contextual_dagger(poly, g, Split{1, 2})) == "poly(3->2){ x1^2*x2 + x1*x3 ; x2 }");
  CHECK_THROWS_AS(contextual_dagger(poly, g, Split{1, 1}), SignatureError);
}

TEST_CASE("partial derivative in the second factor", "[combinators]") {
  const auto ab = P("poly(2->1){ x1*x2 }");
  CHECK(poly.show(partial_derivative(poly, ab, Split{1, 1}, native_forward(poly))) == "poly(3->1){ x1*x3 }");
  const auto sq = P("poly(2->1){ x1*x2^2 }");
  CHECK(poly.show(partial_derivative(poly, sq, Split{1, 1}, native_forward(poly))) == "poly(3->1){ 2*x1*x2*x3 }");
}

TEST_CASE("linearity in the second argument", "[combinators]") {
  const auto d = native_forward(poly);
  CHECK(is_linear_in_second(poly, P("poly(2->1){ x1^2*x2 }"), Split{1, 1}, d));
  CHECK_FALSE(is_linear_in_second(poly, P("poly(2->1){ x1*x2^2 }"), Split{1, 1}, d));
  CHECK_FALSE(is_linear_in_second(poly, P("poly(2->1){ x1 + x2 }"), Split{1, 1}, d));
  CHECK(is_linear_in_second(poly, P("poly(2->1){ x1 + x2 }"), Split{0, 2}, d));
}

TEST_CASE("chain context", "[combinators]") {
  const auto f = P("poly(1->1){ x1^2 }");
  CHECK(poly.show(chain_context(poly, f, 2)) == "poly(3->4){ x1 ; x1^2 ; x2 ; x3 }");
}

TEST_CASE("reverse derivative rebuilt from D and the contextual dagger", "[combinators][property]") {
  Rng rng(41);
  const GeneratorCaps caps{};
  for (int n = 0; n < 100; ++n) {
    const auto f = poly.generate(rng, rng.below(4), rng.below(4), caps);
    const auto viaNative = reverse_from_forward_dagger(poly, f, native_forward(poly), induced_contextual_dagger(poly));
    const auto viaDerived = reverse_from_forward_dagger(poly, f, derived_forward(poly), induced_contextual_dagger(poly));
    CHECK(viaNative == poly.reverse(f));
    CHECK(viaDerived == poly.reverse(f));
  }
}

TEST_CASE("combinators agree across categories on linear maps", "[combinators][property]") {
  // A matrix and the linear polynomial map it denotes have the same dagger.
  const MatCategory<IntRig> mat{};
  Rng rng(43);
  const GeneratorCaps caps{};
  for (int n = 0; n < 50; ++n) {
    const std::size_t a = 1 + rng.below(3), b = 1 + rng.below(3);
    const auto m = mat.generate(rng, a, b, caps);
    std::vector<Polynomial<IntRig>> comps;
    for (std::size_t j = 0; j < b; ++j) {
      Polynomial<IntRig> p = poly.zero_poly(a);
      for (std::size_t i = 0; i < a; ++i) {
        p = p + Polynomial<IntRig>::constant(IntRig{}, a, m(i, j)) * poly.var(a, i + 1);
      }
      comps.push_back(p);
    }
    const PolyMorphism<IntRig> f(IntRig{}, a, comps);
    const auto fd = dagger(poly, f);
    const auto md = dagger(mat, m);
    for (std::size_t i = 0; i < a; ++i) {
      for (std::size_t j = 0; j < b; ++j) {
        Monomial mono(j + 1, 0);
        mono[j] = 1;
        CHECK(fd[i].coefficient(mono) == md(j, i));
      }
    }
  }
}

TEST_CASE("smooth combinators", "[combinators]") {
  const SmoothCategory smooth{};
  const auto f = smooth.parse("smooth(2->1){ sin(x1)*x2 }");
  CHECK(smooth.compare(forward_from_reverse(smooth, f), smooth.forward(f)).equal);
  CHECK(is_linear_in_second(smooth, f, Split{1, 1}, native_forward(smooth)));
  CHECK_FALSE(is_linear(smooth, f, native_forward(smooth)));
  CHECK(smooth.compare(contextual_dagger(smooth, f, Split{1, 1}), smooth.parse("smooth(2->1){ sin(x1)*x2 }")).equal);
}
