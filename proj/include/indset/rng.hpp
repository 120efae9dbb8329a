#pragma once

#include <cstdint>

namespace indset {

// SplitMix64 stream with keyed substream derivation.
//
// The generator is counter-based: state advances by a fixed odd constant and
// each output is a bijective mix of the counter, so a (seed, key-path) pair
// always denotes the same stream regardless of what other streams were drawn
// from. child(key) derives a statistically independent stream; derivation
// does not advance this stream.
class Rng {
 public:
  explicit Rng(uint64_t seed) : origin_(mix(seed + kGamma)), state_(origin_) {}

  Rng child(uint64_t key) const {
    Rng r(0);
    r.origin_ = mix(origin_ ^ mix(key * kKeyGamma + kGamma));
    r.state_ = r.origin_;
    return r;
  }

  uint64_t next_u64() {
    state_ += kGamma;
    return mix(state_);
  }

  // Uniform double in [0, 1), 53 random bits.
  double next_unit() { return (next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n) via multiply-shift; n = 0 is a contract error
  // checked by callers. Consumes exactly one 64-bit draw.
  uint32_t next_below(uint32_t n) {
    return static_cast<uint32_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // True with probability threshold / 2^64. Consumes one draw.
  bool next_below_threshold(uint64_t threshold) { return next_u64() < threshold; }

  // Threshold for next_below_threshold approximating probability p.
  // p <= 0 never fires; p >= 1 maps to 2^64 - 1 (off by 2^-64, documented).
  static uint64_t bernoulli_threshold(double p) {
    if (p <= 0.0) return 0;
    if (p >= 1.0) return ~0ull;
    return static_cast<uint64_t>(p * 0x1.0p64);
  }

  bool next_bernoulli(double p) { return next_below_threshold(bernoulli_threshold(p)); }

 private:
  static constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ull;
  static constexpr uint64_t kKeyGamma = 0xD1342543DE82EF95ull;

  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  uint64_t origin_;  // stream identity: fixed at construction/derivation
  uint64_t state_;   // draw counter, advances by kGamma per output
};

}  // namespace indset
