#ifndef XRT_RNG_HPP
#define XRT_RNG_HPP

#include <cstdint>

namespace xrt {

// PCG32 (Melissa O'Neill's pcg32-xsh-rr). Chosen as the project-wide
// generator because it is seedable, portable across platforms (pure 64-bit
// integer arithmetic), and supports independent substreams: generators with
// the same seed but different stream ids produce unrelated sequences.
//
// Substream convention: stream 0 is the default for standalone synthesis;
// a multi-flow simulation gives flow i the substream with stream id i, so
// results do not depend on scheduling order.
class Pcg32 {
 public:
  explicit Pcg32(uint64_t seed, uint64_t stream = 0) {
    state_ = 0;
    inc_ = (stream << 1u) | 1u;
    next_u32();
    state_ += seed;
    next_u32();
  }

  uint32_t next_u32() {
    uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + inc_;
    uint32_t xorshifted = static_cast<uint32_t>(((old >> 18u) ^ old) >> 27u);
    uint32_t rot = static_cast<uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
  }

  uint64_t next_u64() {
    uint64_t hi = next_u32();
    return (hi << 32) | next_u32();
  }

  // Uniform double strictly inside (0, 1): 53-bit resolution, offset by half
  // an ulp so neither endpoint is reachable.
  double next_unit_open() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  uint64_t state_;
  uint64_t inc_;
};

// SplitMix64 finalizer, used to derive well-separated seeds when combining
// a simulation seed with per-flow stream seeds.
inline uint64_t mix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace xrt

#endif  // XRT_RNG_HPP
