#pragma once

// Commutative rigs (semirings). Nothing here assumes additive inverses.

#include <charconv>
#include <concepts>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "rdcat/random.hpp"

namespace rdcat {

template <class R>
concept Rig = std::equality_comparable<R> && std::copyable<R> &&
              requires(const R& r, const typename R::value_type& a, std::string_view text, Rng& rng) {
                typename R::value_type;
                { r.zero() } -> std::same_as<typename R::value_type>;
                { r.one() } -> std::same_as<typename R::value_type>;
                { r.add(a, a) } -> std::same_as<typename R::value_type>;
                { r.mul(a, a) } -> std::same_as<typename R::value_type>;
                { r.equal(a, a) } -> std::same_as<bool>;
                { r.to_string(a) } -> std::same_as<std::string>;
                { r.parse(text) } -> std::same_as<typename R::value_type>;
                { r.sample(rng) } -> std::same_as<typename R::value_type>;
                { r.name() } -> std::same_as<std::string>;
              };

/// r added to itself k times; k = 0 gives zero. Computed by doubling, which
/// agrees with the k-fold sum by associativity.
template <Rig R>
typename R::value_type nat_scale(const R& rig, std::uint64_t k, const typename R::value_type& r) {
  auto acc = rig.zero();
  auto power = r;
  while (k != 0) {
    if (k & 1U) acc = rig.add(acc, power);
    k >>= 1U;
    if (k != 0) power = rig.add(power, power);
  }
  return acc;
}

template <Rig R>
bool rig_equal(const R& rig, const typename R::value_type& a, const typename R::value_type& b) {
  return rig.equal(a, b);
}

template <Rig R>
bool is_zero(const R& rig, const typename R::value_type& a) {
  return rig.equal(a, rig.zero());
}

namespace detail {

// __extension__ keeps -Wpedantic quiet about the GCC/Clang 128-bit types.
__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in rig addition");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in rig multiplication");
  return out;
}

template <class Int>
Int parse_integer(std::string_view text) {
  Int value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw std::invalid_argument("not an integer literal: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace detail

struct IntRig {
  using value_type = std::int64_t;
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(value_type a, value_type b) const { return detail::checked_add(a, b); }
  value_type mul(value_type a, value_type b) const { return detail::checked_mul(a, b); }
  bool equal(value_type a, value_type b) const { return a == b; }
  std::string to_string(value_type a) const { return std::to_string(a); }
  value_type parse(std::string_view t) const { return detail::parse_integer<std::int64_t>(t); }
  value_type sample(Rng& rng) const { return static_cast<value_type>(rng.below(6)); }
  std::string name() const { return "int"; }
  bool operator==(const IntRig&) const = default;
};

struct NatRig {
  using value_type = std::uint64_t;
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(value_type a, value_type b) const {
    value_type out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("natural overflow in rig addition");
    return out;
  }
  value_type mul(value_type a, value_type b) const {
    value_type out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("natural overflow in rig multiplication");
    return out;
  }
  bool equal(value_type a, value_type b) const { return a == b; }
  std::string to_string(value_type a) const { return std::to_string(a); }
  value_type parse(std::string_view t) const { return detail::parse_integer<std::uint64_t>(t); }
  value_type sample(Rng& rng) const { return rng.below(6); }
  std::string name() const { return "nat"; }
  bool operator==(const NatRig&) const = default;
};

/// Exact rational, always stored with den > 0 and gcd(num, den) = 1.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(detail::i128 n, detail::i128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    detail::i128 a = n < 0 ? -n : n;
    detail::i128 b = d;
    while (b != 0) {
      const detail::i128 t = a % b;
      a = b;
      b = t;
    }
    const detail::i128 g = a == 0 ? 1 : a;
    n /= g;
    d /= g;
    constexpr detail::i128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr detail::i128 hi = std::numeric_limits<std::int64_t>::max();
    if (n < lo || n > hi || d > hi) throw std::overflow_error("rational overflow");
    return Rational{static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)};
  }

  bool operator==(const Rational&) const = default;
};

struct RatRig {
  using value_type = Rational;
  value_type zero() const { return {0, 1}; }
  value_type one() const { return {1, 1}; }
  value_type add(const value_type& a, const value_type& b) const {
    return Rational::make(static_cast<detail::i128>(a.num) * b.den + static_cast<detail::i128>(b.num) * a.den,
                          static_cast<detail::i128>(a.den) * b.den);
  }
  value_type mul(const value_type& a, const value_type& b) const {
    return Rational::make(static_cast<detail::i128>(a.num) * b.num, static_cast<detail::i128>(a.den) * b.den);
  }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::string to_string(const value_type& a) const {
    return a.den == 1 ? std::to_string(a.num) : std::to_string(a.num) + "/" + std::to_string(a.den);
  }
  value_type parse(std::string_view t) const {
    const auto slash = t.find('/');
    if (slash == std::string_view::npos) return {detail::parse_integer<std::int64_t>(t), 1};
    return Rational::make(detail::parse_integer<std::int64_t>(t.substr(0, slash)),
                          detail::parse_integer<std::int64_t>(t.substr(slash + 1)));
  }
  value_type sample(Rng& rng) const {
    return Rational::make(static_cast<detail::i128>(rng.below(6)), static_cast<detail::i128>(rng.between(1, 3)));
  }
  std::string name() const { return "rat"; }
  bool operator==(const RatRig&) const = default;
};

/// Booleans under (or, and).
struct BoolRig {
  using value_type = bool;
  value_type zero() const { return false; }
  value_type one() const { return true; }
  value_type add(value_type a, value_type b) const { return a || b; }
  value_type mul(value_type a, value_type b) const { return a && b; }
  bool equal(value_type a, value_type b) const { return a == b; }
  std::string to_string(value_type a) const { return a ? "1" : "0"; }
  value_type parse(std::string_view t) const {
    if (t == "true") return true;
    if (t == "false") return false;
    // A natural literal k denotes the k-fold sum of one.
    return detail::parse_integer<std::uint64_t>(t) != 0;
  }
  value_type sample(Rng& rng) const { return rng.below(6) != 0; }
  std::string name() const { return "bool"; }
  bool operator==(const BoolRig&) const = default;
};

/// Integers modulo m, values kept in [0, m).
struct ModRig {
  using value_type = std::uint64_t;
  std::uint64_t modulus = 7;

  explicit ModRig(std::uint64_t m = 7) : modulus(m) {
    if (m == 0) throw std::invalid_argument("modulus must be positive");
  }

  value_type zero() const { return 0; }
  value_type one() const { return 1 % modulus; }
  value_type add(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<detail::u128>(a) + b) % modulus);
  }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<detail::u128>(a) * b) % modulus);
  }
  bool equal(value_type a, value_type b) const { return a == b; }
  std::string to_string(value_type a) const { return std::to_string(a); }
  value_type parse(std::string_view t) const {
    const auto v = detail::parse_integer<std::int64_t>(t);
    const auto m = static_cast<std::int64_t>(modulus);
    return static_cast<value_type>(((v % m) + m) % m);
  }
  value_type sample(Rng& rng) const { return rng.below(6) % modulus; }
  std::string name() const { return "mod:" + std::to_string(modulus); }
  bool operator==(const ModRig&) const = default;
};

/// Element of the (max, +) rig: an integer or the distinguished -inf.
struct MaxPlus {
  bool neg_inf = true;
  std::int64_t value = 0;

  static MaxPlus finite(std::int64_t v) { return {false, v}; }
  static MaxPlus minus_infinity() { return {true, 0}; }

  bool operator==(const MaxPlus& o) const { return neg_inf == o.neg_inf && (neg_inf || value == o.value); }
};

struct TropicalRig {
  using value_type = MaxPlus;
  value_type zero() const { return MaxPlus::minus_infinity(); }
  value_type one() const { return MaxPlus::finite(0); }
  value_type add(const value_type& a, const value_type& b) const {
    if (a.neg_inf) return b;
    if (b.neg_inf) return a;
    return MaxPlus::finite(std::max(a.value, b.value));
  }
  value_type mul(const value_type& a, const value_type& b) const {
    if (a.neg_inf || b.neg_inf) return MaxPlus::minus_infinity();
    return MaxPlus::finite(detail::checked_add(a.value, b.value));
  }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::string to_string(const value_type& a) const { return a.neg_inf ? "-inf" : std::to_string(a.value); }
  value_type parse(std::string_view t) const {
    if (t == "-inf") return MaxPlus::minus_infinity();
    return MaxPlus::finite(detail::parse_integer<std::int64_t>(t));
  }
  value_type sample(Rng& rng) const {
    const auto k = rng.below(6);
    if (k == 0) return MaxPlus::minus_infinity();
    return MaxPlus::finite(static_cast<std::int64_t>(k) - 3);
  }
  std::string name() const { return "tropical"; }
  bool operator==(const TropicalRig&) const = default;
};

using AnyRig = std::variant<IntRig, NatRig, RatRig, BoolRig, ModRig, TropicalRig>;

/// Resolves a rig name as used on the command line: int, nat, rat, bool,
/// mod:m, tropical.
inline AnyRig rig_from_name(std::string_view name) {
  if (name == "int") return IntRig{};
  if (name == "nat") return NatRig{};
  if (name == "rat") return RatRig{};
  if (name == "bool") return BoolRig{};
  if (name == "tropical") return TropicalRig{};
  if (name.starts_with("mod:")) {
    const auto m = detail::parse_integer<std::uint64_t>(name.substr(4));
    if (m == 0) throw std::invalid_argument("mod:0 is not a rig");
    return ModRig{m};
  }
  throw std::invalid_argument("unknown rig '" + std::string(name) + "'");
}

}  // namespace rdcat
