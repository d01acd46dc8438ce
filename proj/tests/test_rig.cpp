#include <catch2/catch_amalgamated.hpp>

#include <limits>
#include <stdexcept>
#include <variant>

#include "rdcat/rig.hpp"

using namespace rdcat;

namespace {

template <Rig R>
void check_rig_laws(const R& r, std::uint64_t seed) {
  Rng rng(seed);
  for (int n = 0; n < 200; ++n) {
    const auto a = r.sample(rng);
    const auto b = r.sample(rng);
    const auto c = r.sample(rng);
    INFO(r.name() << ": a=" << r.to_string(a) << " b=" << r.to_string(b) << " c=" << r.to_string(c));
    CHECK(r.equal(r.add(a, r.add(b, c)), r.add(r.add(a, b), c)));
    CHECK(r.equal(r.add(a, b), r.add(b, a)));
    CHECK(r.equal(r.add(a, r.zero()), a));
    CHECK(r.equal(r.mul(a, r.mul(b, c)), r.mul(r.mul(a, b), c)));
    CHECK(r.equal(r.mul(a, r.one()), a));
    CHECK(r.equal(r.mul(r.one(), a), a));
    CHECK(r.equal(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c))));
    CHECK(r.equal(r.mul(r.add(a, b), c), r.add(r.mul(a, c), r.mul(b, c))));
    CHECK(r.equal(r.mul(a, r.zero()), r.zero()));
    CHECK(r.equal(r.mul(r.zero(), a), r.zero()));
    CHECK(r.equal(r.parse(r.to_string(a)), a));
  }
}

}  // namespace

TEST_CASE("rig laws hold on sampled elements", "[rig][property]") {
  check_rig_laws(IntRig{}, 1);
  check_rig_laws(NatRig{}, 2);
  check_rig_laws(RatRig{}, 3);
  check_rig_laws(BoolRig{}, 4);
  check_rig_laws(ModRig{7}, 5);
  check_rig_laws(ModRig{2}, 6);
  check_rig_laws(TropicalRig{}, 7);
}

TEST_CASE("nat_scale is the k-fold sum", "[rig]") {
  CHECK(nat_scale(IntRig{}, 0, std::int64_t{9}) == 0);
  CHECK(nat_scale(IntRig{}, 5, std::int64_t{3}) == 15);
  CHECK(nat_scale(IntRig{}, 7, std::int64_t{-2}) == -14);
  CHECK(nat_scale(BoolRig{}, 4, true) == true);
  CHECK(nat_scale(BoolRig{}, 0, true) == false);
  CHECK(nat_scale(ModRig{7}, 5, std::uint64_t{3}) == 1);
  CHECK(nat_scale(TropicalRig{}, 3, MaxPlus::finite(4)) == MaxPlus::finite(4));
  CHECK(nat_scale(RatRig{}, 3, Rational{1, 6}) == Rational{1, 2});

  Rng rng(11);
  const IntRig z;
  for (int n = 0; n < 100; ++n) {
    const auto k = rng.below(40);
    const auto r = z.sample(rng);
    std::int64_t sum = 0;
    for (std::uint64_t i = 0; i < k; ++i) sum += r;
    CHECK(nat_scale(z, k, r) == sum);
  }
}

TEST_CASE("integer rigs detect overflow", "[rig]") {
  constexpr auto big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(IntRig{}.add(big, 1), std::overflow_error);
  CHECK_THROWS_AS(IntRig{}.mul(big, 2), std::overflow_error);
  CHECK_THROWS_AS(NatRig{}.add(std::numeric_limits<std::uint64_t>::max(), 1), std::overflow_error);
}

TEST_CASE("rational arithmetic stays reduced", "[rig]") {
  const RatRig q;
  CHECK(q.parse("2/4") == Rational{1, 2});
  CHECK(q.parse("3/-6") == Rational{-1, 2});
  CHECK(q.add(Rational{1, 2}, Rational{1, 3}) == Rational{5, 6});
  CHECK(q.mul(Rational{2, 3}, Rational{3, 4}) == Rational{1, 2});
  CHECK(q.to_string(Rational{-1, 2}) == "-1/2");
  CHECK(q.to_string(Rational{4, 1}) == "4");
  CHECK_THROWS(q.parse("1/0"));
}

TEST_CASE("modular and boolean parsing", "[rig]") {
  CHECK(ModRig{7}.parse("-1") == 6);
  CHECK(ModRig{7}.parse("15") == 1);
  CHECK(ModRig{1}.one() == 0);
  CHECK_THROWS_AS(ModRig{0}, std::invalid_argument);
  CHECK(BoolRig{}.parse("3") == true);
  CHECK(BoolRig{}.parse("0") == false);
  CHECK(BoolRig{}.add(true, true) == true);
}

TEST_CASE("tropical rig is (max, +) with -inf as zero", "[rig]") {
  const TropicalRig t;
  CHECK(t.add(MaxPlus::finite(2), MaxPlus::finite(5)) == MaxPlus::finite(5));
  CHECK(t.mul(MaxPlus::finite(2), MaxPlus::finite(5)) == MaxPlus::finite(7));
  CHECK(t.mul(t.zero(), MaxPlus::finite(5)) == t.zero());
  CHECK(t.parse("-inf") == t.zero());
  CHECK(t.to_string(t.one()) == "0");
}

TEST_CASE("rigs resolve by name", "[rig]") {
  CHECK(std::holds_alternative<IntRig>(rig_from_name("int")));
  CHECK(std::holds_alternative<TropicalRig>(rig_from_name("tropical")));
  const auto m = rig_from_name("mod:5");
  REQUIRE(std::holds_alternative<ModRig>(m));
  CHECK(std::get<ModRig>(m).modulus == 5);
  CHECK(std::get<ModRig>(m).name() == "mod:5");
  CHECK_THROWS(rig_from_name("mod:0"));
  CHECK_THROWS(rig_from_name("real"));
}
