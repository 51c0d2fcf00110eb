#pragma once

#include <cstdint>

namespace subcount {

// Counter-based hashing: every random decision in the engine is a pure
// function of (seed, counter...) words, so results never depend on thread
// scheduling or call order.

inline uint64_t mix64(uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

inline uint64_t hash3(uint64_t a, uint64_t b, uint64_t c) {
  uint64_t h = mix64(a + 0x9e3779b97f4a7c15ULL);
  h = mix64(h ^ (b + 0xbf58476d1ce4e5b9ULL));
  h = mix64(h ^ (c + 0x94d049bb133111ebULL));
  return h;
}

// Uniform double in [0, 1) with 53 bits of precision.
inline double uniform01(uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace subcount
