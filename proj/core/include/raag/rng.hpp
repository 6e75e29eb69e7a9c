#pragma once

#include <cstdint>

namespace raag {

// Pseudo-random numbers for every sampling path in this project come from
// SplitMix64 (Steele, Lea, Flood): the state advances by a fixed odd
// increment and each output is a bijective finalizer of the state, so the
// generator is counter-based, trivially splittable and produces the same
// stream on every platform.  Monte Carlo trial i never shares draws with
// trial j: each trial gets its own state via stream_seed(master, i).
//
// Pinned algorithm identifier, echoed verbatim in experiment reports.
inline constexpr const char* kRngAlgorithm =
    "splitmix64-v1; stream_seed(m,i) = mix64(m + gamma) ^ mix64(i * gamma + 1); "
    "unit = (u64 >> 11) * 2^-53";

inline constexpr std::uint64_t kSplitMix64Gamma = 0x9e3779b97f4a7c15ULL;

// Output stage of SplitMix64 (a 64-bit avalanche permutation).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next_u64() noexcept {
    state_ += kSplitMix64Gamma;
    return mix64(state_);
  }

  // Uniform double in [0, 1) with 53 random mantissa bits.
  double next_unit() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// Decorrelated per-stream seed: both inputs pass through the full avalanche
// before being combined, so neighbouring trial indices (and neighbouring
// master seeds) start from unrelated states.
constexpr std::uint64_t stream_seed(std::uint64_t master_seed,
                                    std::uint64_t stream_index) noexcept {
  return mix64(master_seed + kSplitMix64Gamma) ^
         mix64(stream_index * kSplitMix64Gamma + 1);
}

}  // namespace raag
