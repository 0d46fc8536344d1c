#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace lpbench {

/// Sebastiano Vigna's splitmix64 finalizer. Used for seed derivation and
/// stateless pair hashing; the output is a bijection of the input.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Folds one value into a running seed: h' = splitmix64(h ^ splitmix64(v)).
constexpr std::uint64_t mix_seed(std::uint64_t h, std::uint64_t v) {
    return splitmix64(h ^ splitmix64(v));
}

/// Seed for replicate `r` of a base seed: base XOR splitmix64(r).
constexpr std::uint64_t replicate_seed(std::uint64_t base, std::uint64_t r) {
    return base ^ splitmix64(r);
}

/// Maps a 64-bit word to a double in [0, 1) using the top 53 bits.
constexpr double to_unit_double(std::uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

/// Deterministic generator: std::mt19937_64 (bit-exact per the C++ standard)
/// with unbiased bounded draws, so streams are stable across platforms.
/// std::uniform_int_distribution is implementation-defined and is not used.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform draw in [0, bound), bound >= 1. Rejection below 2^64 mod bound
    /// keeps the draw unbiased.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (~bound + 1) % bound; // 2^64 mod bound
        for (;;) {
            const std::uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return to_unit_double(next()); }

    bool bernoulli(double p) { return unit() < p; }

  private:
    std::mt19937_64 engine_;
};

} // namespace lpbench
