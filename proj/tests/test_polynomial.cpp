#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "rdcat/polynomial.hpp"

using namespace rdcat;

namespace {

using P = Polynomial<IntRig>;

P parse(std::size_t n, std::string_view text) { return parse_polynomial(IntRig{}, n, text); }

P random_poly(Rng& rng, std::size_t nvars) {
  P p(IntRig{}, nvars);
  const auto terms = rng.below(4);
  for (std::uint64_t t = 0; t < terms; ++t) {
    Monomial m(nvars, 0);
    for (auto& e : m) e = static_cast<std::uint32_t>(rng.below(3));
    p.accumulate(m, static_cast<std::int64_t>(rng.below(7)) - 3);
  }
  return p;
}

}  // namespace

TEST_CASE("canonical printing orders terms by degree then lexicographically", "[polynomial]") {
  CHECK(to_string(parse(2, "5*x2 + 3*x1*x2 + x1^2")) == "x1^2 + 3*x1*x2 + 5*x2");
  CHECK(to_string(parse(2, "1 + x2 + x1")) == "x1 + x2 + 1");
  CHECK(to_string(parse(2, "x1*x2 + -1*x2*x1")) == "0");
  CHECK(to_string(parse(1, "-3*x1")) == "-3*x1");
  CHECK(to_string(parse(3, "x3*x1*x3")) == "x1*x3^2");
}

TEST_CASE("ring operations on small examples", "[polynomial]") {
  const auto x1 = P::variable(IntRig{}, 1, 1);
  const auto one = P::constant(IntRig{}, 1, 1);
  const auto sq = (x1 + one) * (x1 + one);
  CHECK(to_string(sq) == "x1^2 + 2*x1 + 1");
  CHECK(sq.degree() == 2);
  CHECK(sq.coefficient({1}) == 2);
  CHECK(sq.coefficient({}) == 1);
}

TEST_CASE("formal partial derivatives", "[polynomial]") {
  const auto p = parse(2, "x1^2 + 3*x1*x2 + 5*x2");
  CHECK(to_string(poly_partial(p, 1)) == "2*x1 + 3*x2");
  CHECK(to_string(poly_partial(p, 2)) == "3*x1 + 5");
  CHECK(to_string(poly_partial(parse(1, "x1^3"), 1)) == "3*x1^2");
  CHECK(poly_partial(parse(2, "x1"), 2).is_zero());
  CHECK_THROWS_AS(poly_partial(p, 0), SignatureError);

  // Over Z mod 3 the derivative of x^3 vanishes.
  const auto cube = parse_polynomial(ModRig{3}, 1, "x1^3");
  CHECK(poly_partial(cube, 1).is_zero());
}

TEST_CASE("substitution and evaluation", "[polynomial]") {
  const auto p = parse(2, "x1^2 + 3*x1*x2 + 5*x2");
  CHECK(poly_eval(p, std::vector<std::int64_t>{2, 1}) == 4 + 6 + 5);

  const std::vector<P> args{parse(1, "x1 + 1"), parse(1, "2")};
  CHECK(to_string(poly_substitute(p, args)) == "x1^2 + 8*x1 + 17");

  const std::vector<P> swap{parse(2, "x2"), parse(2, "x1")};
  CHECK(to_string(poly_substitute(p, swap)) == "3*x1*x2 + x2^2 + 5*x1");
}

TEST_CASE("evaluation is a homomorphism", "[polynomial][property]") {
  Rng rng(7);
  for (int n = 0; n < 200; ++n) {
    const std::size_t nvars = 1 + rng.below(3);
    const auto p = random_poly(rng, nvars);
    const auto q = random_poly(rng, nvars);
    std::vector<std::int64_t> pt(nvars);
    for (auto& v : pt) v = static_cast<std::int64_t>(rng.below(7)) - 3;
    CHECK(poly_eval(p + q, pt) == poly_eval(p, pt) + poly_eval(q, pt));
    CHECK(poly_eval(p * q, pt) == poly_eval(p, pt) * poly_eval(q, pt));
    CHECK(p * q == q * p);
    // Leibniz rule.
    CHECK(poly_partial(p * q, 1) == poly_partial(p, 1) * q + p * poly_partial(q, 1));
    CHECK(parse(nvars, to_string(p)) == p);
  }
}

TEST_CASE("parse errors carry positions", "[polynomial]") {
  CHECK_THROWS_AS(parse(2, "x3"), ParseError);
  CHECK_THROWS_AS(parse(2, "x1 +"), ParseError);
  CHECK_THROWS_AS(parse(2, "x1 x2"), ParseError);
  try {
    parse(2, "x1 + x7");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 6);
  }
  CHECK_THROWS_AS(parse_polynomial(ModRig{5}, 1, "x1") + parse_polynomial(ModRig{7}, 1, "x1"), RigMismatch);
}
