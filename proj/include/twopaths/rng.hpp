#pragma once

#include <cstdint>

namespace twopaths {

// SplitMix64 (Steele/Lea/Flood). Every random decision in the project goes
// through this generator so corpora and solver runs reproduce bit-for-bit on
// any platform; the standard library distributions are never used.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, bound); bound > 0. Lemire multiply-shift with
  // rejection, so the result is exactly uniform.
  std::uint64_t below(std::uint64_t bound) {
    unsigned __int128 wide = (unsigned __int128)next() * bound;
    auto low = (std::uint64_t)wide;
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        wide = (unsigned __int128)next() * bound;
        low = (std::uint64_t)wide;
      }
    }
    return (std::uint64_t)(wide >> 64);
  }

  int below_int(int bound) { return (int)below((std::uint64_t)bound); }

 private:
  std::uint64_t state_;
};

// SplitMix64 finalizer, usable as a standalone 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Splits a master seed into independent streams: stream i feeds trial i of a
// solver, substream tags inside a trial, generator purposes, and so on.
// derive_seed(seed, i) = mix64(seed + GOLDEN * (i + 1)).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix64(seed + 0x9e3779b97f4a7c15ull * (stream + 1));
}

}  // namespace twopaths
