#include <catch2/catch_amalgamated.hpp>

#include "rdcat/mat_category.hpp"
#include "rdcat/poly_category.hpp"
#include "rdcat/smooth_category.hpp"

using namespace rdcat;

namespace {

template <class C>
void roundtrip(const C& c, std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  GeneratorCaps caps{};
  caps.max_arity = 4;
  caps.max_depth = 4;
  for (std::size_t n = 0; n < count; ++n) {
    const auto f = c.generate(rng, rng.below(5), rng.below(5), caps);
    const auto text = c.show(f);
    INFO(text);
    const auto back = c.parse(text);
    CHECK(back == f);
    CHECK(c.show(back) == text);
  }
}

}  // namespace

TEST_CASE("poly literals round-trip", "[text][property]") {
  roundtrip(PolyCategory<IntRig>{}, 1, 500);
  roundtrip(PolyCategory<NatRig>{}, 2, 200);
  roundtrip(PolyCategory<RatRig>{}, 3, 200);
  roundtrip(PolyCategory<BoolRig>{}, 4, 200);
  roundtrip(PolyCategory<ModRig>{ModRig{7}}, 5, 200);
  roundtrip(PolyCategory<TropicalRig>{}, 6, 200);
}

TEST_CASE("mat literals round-trip", "[text][property]") {
  roundtrip(MatCategory<IntRig>{}, 7, 500);
  roundtrip(MatCategory<TropicalRig>{}, 8, 200);
  roundtrip(MatCategory<RatRig>{}, 9, 200);
}

TEST_CASE("smooth literals round-trip", "[text][property]") {
  roundtrip(SmoothCategory{}, 10, 500);
}

TEST_CASE("whitespace and layout are not significant", "[text]") {
  const PolyCategory<IntRig> poly{};
  const auto a = poly.parse("poly(2->2){ x1^2 + 3*x1*x2 ; 5 }");
  const auto b = poly.parse("  poly ( 2->2 )\n{\n  x1 ^ 2 +3 * x1*x2;\n 5\n}  ");
  CHECK(a == b);
  try {
    poly.parse("poly(2->1){\n  x1 +\n  x9 }");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);
  }
}
