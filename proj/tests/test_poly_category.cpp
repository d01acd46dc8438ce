#include <catch2/catch_amalgamated.hpp>

#include "rdcat/combinators.hpp"
#include "rdcat/poly_category.hpp"

using namespace rdcat;

namespace {

const PolyCategory<IntRig> poly{};

}  // namespace

TEST_CASE("worked example p = x1^2 + 3 x1 x2 + 5 x2", "[poly]") {
  const auto p = poly.parse("poly(2->1){ x1^2 + 3*x1*x2 + 5*x2 }");

  // D[p] = (2 x1 + 3 x2) y1 + (3 x1 + 5) y2 with y1 = x3, y2 = x4.
  const auto d = poly.parse("poly(4->1){ 2*x1*x3 + 3*x2*x3 + 3*x1*x4 + 5*x4 }");
  CHECK(poly.forward(p) == d);
  CHECK(poly.show(poly.forward(p)) == "poly(4->1){ 2*x1*x3 + 3*x1*x4 + 3*x2*x3 + 5*x4 }");

  // R[p] = <(2 x1 + 3 x2) y, (3 x1 + 5) y> with y = x3.
  const auto r = poly.parse("poly(3->2){ 2*x1*x3 + 3*x2*x3 ; 3*x1*x3 + 5*x3 }");
  CHECK(poly.reverse(p) == r);
  CHECK(poly.show(poly.reverse(p)) == "poly(3->2){ 2*x1*x3 + 3*x2*x3 ; 3*x1*x3 + 5*x3 }");

  // p-dagger = <0, 5 x>.
  CHECK(poly.show(dagger(poly, p)) == "poly(1->2){ 0 ; 5*x1 }");
}

TEST_CASE("derivatives of small maps", "[poly]") {
  const auto q = poly.parse("poly(1->1){ x1^3 }");
  CHECK(poly.show(poly.reverse(q)) == "poly(2->1){ 3*x1^2*x2 }");
  CHECK(poly.show(poly.forward(q)) == "poly(2->1){ 3*x1^2*x2 }");

  const auto twist = poly.parse("poly(2->2){ x2 ; x1 }");
  CHECK(poly.show(poly.reverse(twist)) == "poly(4->2){ x4 ; x3 }");
  CHECK(poly.show(poly.forward(twist)) == "poly(4->2){ x4 ; x3 }");

  const auto c = poly.parse("poly(1->1){ 7 }");
  CHECK(poly.show(poly.forward(c)) == "poly(2->1){ 0 }");

  const auto zero_dom = poly.parse("poly(0->1){ 4 }");
  CHECK(poly.show(poly.reverse(zero_dom)) == "poly(1->0){ }");
}

TEST_CASE("forward and reverse are adjoint pointwise", "[poly][property]") {
  // sum_j D[f](x, v)_j w_j = sum_i v_i R[f](x, w)_i, checked as polynomials.
  Rng rng(19);
  const GeneratorCaps caps{};
  for (int n = 0; n < 100; ++n) {
    const std::size_t a = 1 + rng.below(3), b = 1 + rng.below(3);
    const auto f = poly.generate(rng, a, b, caps);
    const std::size_t vars = 2 * a + b;  // x, v, w
    std::vector<Polynomial<IntRig>> xv, xw;
    for (std::size_t i = 1; i <= 2 * a; ++i) xv.push_back(poly.var(vars, i));
    for (std::size_t i = 1; i <= a; ++i) xw.push_back(poly.var(vars, i));
    for (std::size_t j = 1; j <= b; ++j) xw.push_back(poly.var(vars, 2 * a + j));
    const auto d = poly.forward(f);
    const auto r = poly.reverse(f);
    Polynomial<IntRig> lhs = poly.zero_poly(vars), rhs = poly.zero_poly(vars);
    for (std::size_t j = 0; j < b; ++j) lhs = lhs + poly_substitute(d[j], xv) * poly.var(vars, 2 * a + j + 1);
    for (std::size_t i = 0; i < a; ++i) rhs = rhs + poly.var(vars, a + i + 1) * poly_substitute(r[i], xw);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("literals", "[poly]") {
  CHECK(poly.show(poly.parse("poly( 2 -> 2 ){x1;x2}")) == "poly(2->2){ x1 ; x2 }");
  CHECK(poly.show(poly.parse("poly(2->0){}")) == "poly(2->0){ }");
  CHECK_THROWS_AS(poly.parse("poly(2->2){ x1 }"), ParseError);
  CHECK_THROWS_AS(poly.parse("poly(2->1){ x1 ; x2 }"), ParseError);
  CHECK_THROWS_AS(poly.parse("poly(1->1){ x2 }"), ParseError);
  CHECK_THROWS_AS(poly.parse("mat(1->1){ 1 }"), ParseError);
  CHECK_THROWS_AS(poly.parse("poly(1->1){ x1 } x"), ParseError);

  const PolyCategory<ModRig> mod7{ModRig{7}};
  CHECK(mod7.show(mod7.parse("poly(1->1){ 9*x1 + -1 }")) == "poly(1->1){ 2*x1 + 6 }");
  const PolyCategory<TropicalRig> trop{};
  CHECK(trop.show(trop.parse("poly(1->1){ -inf*x1 + 3 }")) == "poly(1->1){ 3 }");
}

TEST_CASE("signature errors", "[poly]") {
  const auto f = poly.parse("poly(2->1){ x1 }");
  const auto g = poly.parse("poly(1->1){ x1 }");
  CHECK_THROWS_AS(poly.compose(g, f), SignatureError);
  CHECK_THROWS_AS(poly.pair(f, g), SignatureError);
  CHECK_THROWS_AS(poly.add(f, g), SignatureError);
  const PolyCategory<ModRig> mod5{ModRig{5}};
  const PolyCategory<ModRig> mod7{ModRig{7}};
  CHECK_THROWS_AS(mod5.compose(mod5.parse("poly(1->1){ x1 }"), mod7.parse("poly(1->1){ x1 }")), RigMismatch);
}

TEST_CASE("generators respect their caps", "[poly][property]") {
  Rng rng(5);
  GeneratorCaps caps{};
  caps.max_degree = 2;
  caps.max_terms = 3;
  for (int n = 0; n < 200; ++n) {
    const auto f = poly.generate(rng, 3, 2, caps);
    CHECK(f.dom() == 3);
    CHECK(f.cod() == 2);
    for (const auto& p : f.components()) {
      CHECK(p.degree() <= 2);
      CHECK(p.terms().size() <= 3);
    }
    const auto l = poly.generate_linear(rng, 3, 2, caps);
    CHECK(is_linear(poly, l, native_forward(poly)));
  }
}
