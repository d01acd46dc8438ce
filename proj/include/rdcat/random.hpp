#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace rdcat {

/// Seeded generator with platform-independent draws.
///
/// std::uniform_*_distribution is implementation-defined, so bounded draws
/// are computed directly from the 64-bit engine output. A given seed yields
/// the same sequence on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, n); n must be positive.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

  /// Uniform in [lo, hi] inclusive.
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

  bool chance(std::size_t num, std::size_t den) { return below(den) < num; }

  double uniform(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rdcat
