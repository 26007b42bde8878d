#pragma once

// Seeded randomness for every experiment in the toolkit.
//
// Engine: std::mt19937_64 (its output sequence is fixed by the standard).
// The std:: distributions and std::shuffle are implementation-defined, so
// bounded integers, uniform reals and permutations are derived here from the
// raw 64-bit stream; recorded seeds reproduce across standard libraries.
//
// Seed splitting: split_seed(base, index) = splitmix64(base ^ splitmix64(index + 1)).
// Trial t of a run with base seed s uses split_seed(s, t).

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace gpspec {

using Rng = std::mt19937_64;

__extension__ using Uint128 = unsigned __int128;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t split_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(base ^ splitmix64(index + 1));
}

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

// Uniform integer in [0, bound), bound > 0 (Lemire's multiply-and-reject).
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  Uint128 m = static_cast<Uint128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<Uint128>(rng()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

// Uniform real in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

template <class T>
void shuffle(std::span<T> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i));
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

}  // namespace gpspec
