#pragma once

#include <cstdint>

namespace curio {

/// PCG32 (PCG-XSH-RR 64/32) generator, O'Neill's minimal variant.
///
/// Every trial owns one stream: the initial state is splitmix64(base_seed)
/// and the stream selector is the trial index, so streams for distinct
/// trials never collide. All randomness in a trial is drawn from this one
/// generator in a documented, fixed per-step order (see agent.hpp).
class Pcg32 {
 public:
  Pcg32(std::uint64_t initstate, std::uint64_t initseq) {
    state_ = 0u;
    inc_ = (initseq << 1u) | 1u;
    next_u32();
    state_ += initstate;
    next_u32();
  }

  std::uint32_t next_u32() {
    std::uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + inc_;
    std::uint32_t xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
  }

  /// Uniform double in [0, 1) with 32 bits of resolution.
  double next_double() { return next_u32() * 0x1p-32; }

  /// Unbiased integer in [0, bound) via rejection. bound <= 1 returns 0
  /// without consuming a draw, so degenerate tie-break sets are free.
  std::uint32_t uniform_below(std::uint32_t bound) {
    if (bound <= 1u) return 0u;
    std::uint32_t threshold = -bound % bound;
    for (;;) {
      std::uint32_t r = next_u32();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
  std::uint64_t inc_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// The per-trial stream used by the experiment runner.
inline Pcg32 make_trial_rng(std::uint64_t base_seed, std::uint64_t trial_index) {
  return Pcg32(splitmix64(base_seed), trial_index);
}

}  // namespace curio
