#include <catch2/catch_amalgamated.hpp>

#include "rdcat/category.hpp"
#include "rdcat/poly_category.hpp"

using namespace rdcat;

namespace {

const PolyCategory<IntRig> poly{};

std::string show(const PolyMorphism<IntRig>& f) { return poly.show(f); }

}  // namespace

TEST_CASE("projections and injections name their split", "[category]") {
  CHECK(show(pi0(poly, 2, 1)) == "poly(3->2){ x1 ; x2 }");
  CHECK(show(pi1(poly, 2, 1)) == "poly(3->1){ x3 }");
  CHECK(show(iota0(poly, 2, 1)) == "poly(2->3){ x1 ; x2 ; 0 }");
  CHECK(show(iota1(poly, 2, 1)) == "poly(1->3){ 0 ; 0 ; x1 }");
  CHECK(show(pi1(poly, 0, 2)) == "poly(2->2){ x1 ; x2 }");
  CHECK(show(poly.bang(2)) == "poly(2->0){ }");
}

TEST_CASE("exchange reorders the middle factors", "[category]") {
  CHECK(show(exchange(poly, 1, 1, 1, 1)) == "poly(4->4){ x1 ; x3 ; x2 ; x4 }");
  // (A x B) x (C x D) with arities 1, 2, 1, 1: A=x1, B=x2 x3, C=x4, D=x5.
  CHECK(show(exchange(poly, 1, 2, 1, 1)) == "poly(5->5){ x1 ; x4 ; x2 ; x3 ; x5 }");
  CHECK_THROWS_AS(poly.compose(exchange(poly, 1, 2, 1, 1), pi0(poly, 1, 1)), SignatureError);
}

TEST_CASE("exchange is an involution when the middle arities agree", "[category][property]") {
  for (std::size_t a = 0; a <= 2; ++a) {
    for (std::size_t b = 0; b <= 2; ++b) {
      for (std::size_t d = 0; d <= 2; ++d) {
        const auto ex = exchange(poly, a, b, b, d);
        CHECK(poly.compose(ex, ex) == poly.identity(a + 2 * b + d));
      }
    }
  }
}

TEST_CASE("seq composes diagrammatically", "[category]") {
  const auto f = poly.parse("poly(1->1){ x1^2 }");
  const auto g = poly.parse("poly(1->1){ x1 + 1 }");
  CHECK(show(seq(poly, f, g)) == "poly(1->1){ x1^2 + 1 }");
  CHECK(show(seq(poly, g, f)) == "poly(1->1){ x1^2 + 2*x1 + 1 }");
  CHECK(show(seq(poly, g, g, g)) == "poly(1->1){ x1 + 3 }");
  CHECK_THROWS_AS(seq(poly, f, pi0(poly, 1, 1)), SignatureError);
}

TEST_CASE("product, copair and oplus", "[category]") {
  const auto f = poly.parse("poly(1->1){ x1^2 }");
  const auto g = poly.parse("poly(2->1){ x1*x2 }");
  CHECK(show(product(poly, f, g)) == "poly(3->2){ x1^2 ; x2*x3 }");
  const auto h = poly.parse("poly(1->1){ 2*x1 }");
  CHECK(show(copair(poly, f, h)) == "poly(2->1){ x1^2 + 2*x2 }");
  CHECK(show(oplus(poly, f, h)) == "poly(2->2){ x1^2 ; 2*x2 }");
  CHECK_THROWS_AS(copair(poly, f, pi0(poly, 2, 1)), SignatureError);
}

TEST_CASE("cartesian structure laws", "[category][property]") {
  Rng rng(3);
  const GeneratorCaps caps{};
  for (int n = 0; n < 100; ++n) {
    const std::size_t a = rng.below(3), b = 1 + rng.below(2), c = 1 + rng.below(2);
    const auto f = poly.generate(rng, a, b, caps);
    const auto g = poly.generate(rng, a, c, caps);
    const auto h = poly.generate(rng, b, c, caps);
    const auto k = poly.generate(rng, b, c, caps);
    const auto fg = poly.pair(f, g);
    CHECK(poly.compose(fg, pi0(poly, b, c)) == f);
    CHECK(poly.compose(fg, pi1(poly, b, c)) == g);
    CHECK(poly.pair(poly.compose(fg, pi0(poly, b, c)), poly.compose(fg, pi1(poly, b, c))) == fg);
    CHECK(poly.compose(poly.identity(a), f) == f);
    CHECK(poly.compose(f, poly.identity(b)) == f);
    CHECK(poly.compose(f, poly.bang(b)) == poly.bang(a));
    // Left additivity: precomposition preserves sums and zero.
    CHECK(poly.compose(f, poly.add(h, k)) == poly.add(poly.compose(f, h), poly.compose(f, k)));
    CHECK(poly.compose(f, poly.zero(b, c)) == poly.zero(a, c));
  }
}
