#pragma once

#include <cstdint>

namespace maopt {

/// SplitMix64 finalizer (no state increment).
inline std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Counter-based 64-bit generator: output i is mix64 of state0 + i*gamma.
/// Stream k of seed s starts from mix64(mix64(s) ^ (k + gamma)), so distinct
/// (seed, stream) pairs yield independent, platform-independent sequences.
/// This is the pinned PRNG for every seeded ensemble in the project.
class SplitMix64 {
  public:
    static constexpr std::uint64_t gamma = 0x9E3779B97F4A7C15ull;

    explicit SplitMix64(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(mix64(mix64(seed) ^ (stream + gamma))) {}

    std::uint64_t next() { return mix64(state_ += gamma); }

    /// Uniform in [0, 1), 53-bit resolution.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [0, n) via the multiply-shift reduction.
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>((static_cast<__uint128_t>(next()) * n) >> 64);
    }

  private:
    std::uint64_t state_;
};

}  // namespace maopt
