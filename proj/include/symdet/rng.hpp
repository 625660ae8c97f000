#pragma once

#include <cstdint>

namespace symdet {

/// SplitMix64: the portable generator used for sampled verification and test data.
/// state' = state + 0x9E3779B97F4A7C15; output mixes with the murmur-style finalizer
/// (shifts 30/27/31, multipliers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB).
/// Identical sequences on every platform for a given seed.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (~0ull / bound);
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % bound;
    }

    /// Uniform integer in [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

  private:
    std::uint64_t state_;
};

} // namespace symdet
