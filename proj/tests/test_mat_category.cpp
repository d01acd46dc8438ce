#include <catch2/catch_amalgamated.hpp>

#include "rdcat/combinators.hpp"
#include "rdcat/mat_category.hpp"

using namespace rdcat;

namespace {

const MatCategory<IntRig> mat{};

}  // namespace

TEST_CASE("matrices compose as row vector times matrix", "[mat]") {
  const auto a = mat.parse("mat(2->2){ 1 2 ; 3 4 }");
  const auto b = mat.parse("mat(2->1){ 5 ; 6 }");
  CHECK(mat.show(mat.compose(a, b)) == "mat(2->1){ 17 ; 39 }");
  CHECK(mat.show(mat.transpose(a)) == "mat(2->2){ 1 3 ; 2 4 }");
  CHECK(mat.show(mat.identity(2)) == "mat(2->2){ 1 0 ; 0 1 }");
  CHECK(mat.show(mat.pair(a, b)) == "mat(2->3){ 1 2 5 ; 3 4 6 }");
  CHECK(mat.show(mat.zero(2, 0)) == "mat(2->0){ }");
  CHECK(mat.show(pi1(mat, 1, 1)) == "mat(2->1){ 0 ; 1 }");
  CHECK_THROWS_AS(mat.compose(b, b), SignatureError);
}

TEST_CASE("derivatives of linear maps", "[mat]") {
  const auto row = mat.parse("mat(1->2){ 2 3 }");
  CHECK(mat.show(mat.reverse(row)) == "mat(3->1){ 0 ; 2 ; 3 }");
  CHECK(mat.show(mat.forward(row)) == "mat(2->2){ 0 0 ; 2 3 }");
  CHECK(mat.show(dagger(mat, row)) == "mat(2->1){ 2 ; 3 }");

  const auto g = mat.parse("mat(2->1){ 5 ; 7 }");
  CHECK(mat.show(mat.contextual_transpose(g, Split{1, 1})) == "mat(2->1){ 0 ; 7 }");
  CHECK(mat.contextual_transpose(g, Split{1, 1}) == contextual_dagger(mat, g, Split{1, 1}));
}

TEST_CASE("dagger agrees with transpose", "[mat][property]") {
  Rng rng(31);
  const GeneratorCaps caps{};
  for (int n = 0; n < 100; ++n) {
    const auto f = mat.generate(rng, rng.below(4), rng.below(4), caps);
    CHECK(dagger(mat, f) == mat.transpose(f));
    CHECK(mat.forward(f) == mat.compose(pi1(mat, f.dom(), f.dom()), f));
    const std::size_t ctx = rng.below(f.dom() + 1);
    const Split s{ctx, f.dom() - ctx};
    CHECK(contextual_dagger(mat, f, s) == mat.contextual_transpose(f, s));
  }
}

TEST_CASE("tropical matrices", "[mat]") {
  const MatCategory<TropicalRig> trop{};
  const auto a = trop.parse("mat(2->2){ 0 -inf ; 1 2 }");
  const auto b = trop.parse("mat(2->1){ 3 ; -inf }");
  // (max, +) product: row 1 = max(0+3, -inf) = 3, row 2 = max(1+3, 2-inf) = 4.
  CHECK(trop.show(trop.compose(a, b)) == "mat(2->1){ 3 ; 4 }");
  CHECK(trop.show(trop.identity(2)) == "mat(2->2){ 0 -inf ; -inf 0 }");
}

TEST_CASE("matrix literal errors", "[mat]") {
  CHECK_THROWS_AS(mat.parse("mat(2->2){ 1 2 ; 3 }"), ParseError);
  CHECK_THROWS_AS(mat.parse("mat(1->1){ 1 ; 2 }"), ParseError);
  CHECK_THROWS_AS(mat.parse("mat(1->1){ y }"), ParseError);
  const MatCategory<NatRig> nat{};
  CHECK_THROWS_AS(nat.parse("mat(1->1){ -1 }"), ParseError);
}
