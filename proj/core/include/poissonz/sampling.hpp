#pragma once

#include <cstdint>
#include <random>

#include "poissonz/exactalg.hpp"

namespace poissonz {

inline constexpr long kDefaultHeight = 97;
inline constexpr int kDefaultRetries = 20;

/// Seeded source of random rational points with coordinates in {-H..H}.
/// mt19937_64 output is fixed by the standard, so draws are portable.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, long height = kDefaultHeight) : rng_(seed), height_(height) {
    if (height < 1) throw Error("sampling height must be positive");
  }

  long height() const { return height_; }
  std::uint64_t raw() { return rng_(); }
  long integer() { return static_cast<long>(rng_() % static_cast<std::uint64_t>(2 * height_ + 1)) - height_; }
  Rat coordinate() { return Rat(integer()); }
  Rat nonzero() {
    long v = 0;
    while (v == 0) v = integer();
    return Rat(v);
  }
  Vec point(std::size_t n) {
    Vec v(n);
    for (auto& x : v) x = coordinate();
    return v;
  }
  /// Index in [0, n).
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

 private:
  std::mt19937_64 rng_;
  long height_;
};

}  // namespace poissonz
