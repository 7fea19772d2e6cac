#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace subcover {

// Ground-set elements are dense ids in [0, n).
using ElementId = std::uint32_t;
using ElementSpan = std::span<const ElementId>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Deterministic, platform-independent PRNG (splitmix64). std::mt19937_64 is
// portable but the standard distributions are not, so we roll the few draws
// we need on top of raw 64-bit outputs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double next_range(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Uniform in [0, n) without modulo bias (Lemire multiply-shift).
  std::uint64_t next_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::next_below: n must be positive");
    while (true) {
      std::uint64_t x = next_u64();
      __uint128_t m = static_cast<__uint128_t>(x) * n;
      std::uint64_t lo = static_cast<std::uint64_t>(m);
      if (lo >= n || lo >= (-n) % n) return static_cast<std::uint64_t>(m >> 64);
    }
  }

  bool next_bool() { return (next_u64() & 1u) != 0; }

 private:
  std::uint64_t state_;
};

// Integer exponent grid over powers of ratio (> 1). exp_floor returns the
// largest i with ratio^i <= x, exp_ceil the smallest i with ratio^i >= x.
// Log-based with a verification step so grid points land exactly (relative
// tolerance 1e-12); x must be positive and finite.
int exp_floor(double ratio, double x);
int exp_ceil(double ratio, double x);

// True if a sorted id sequence compares lexicographically before another.
bool lex_less(ElementSpan a, ElementSpan b);

// Sorted copy of a subset; also validates ids against the ground size.
std::vector<ElementId> sorted_ids(ElementSpan x, std::size_t ground_size);

}  // namespace subcover
