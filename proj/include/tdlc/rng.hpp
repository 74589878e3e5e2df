#pragma once

#include <cstdint>

namespace tdlc {

// Splittable deterministic generator (splitmix64 core). Every randomized
// suite records its 64-bit seed; results are reproducible bit-for-bit across
// platforms, which std::uniform_int_distribution does not guarantee.
struct SplitRng {
  std::uint64_t state;

  explicit SplitRng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-enough draw in [0, n); desk-scale n makes the modulo bias moot.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  long range(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (next() & 1) != 0; }

  // Child generator independent of subsequent draws from this one.
  SplitRng split() { return SplitRng(next() ^ 0x6a09e667f3bcc909ULL); }
};

}  // namespace tdlc
