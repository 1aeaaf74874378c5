#pragma once

#include <cstdint>

namespace posetkit {

// splitmix64 (Vigna), the project's one PRNG. Everything seeded in this
// repository — the poset generator, the seeded-random selector, test
// corpora — draws from this exact stream so that fixtures are reproducible
// bit for bit across platforms and reimplementations.
//
// State update: s += 0x9E3779B97F4A7C15; output = mix applied to the new s,
// where mix(z) xors and multiplies with 0xBF58476D1CE4E5B9 and
// 0x94D049BB133111EB as below.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), using the top 53 bits.
    double next_unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t next_below(std::uint64_t bound) noexcept { return next() % bound; }

private:
    std::uint64_t state_;
};

/// One splitmix64 step from a fixed state: the stateless mixer used to hash
/// seeds with data (e.g. the seeded-random selector's subset hash).
inline std::uint64_t splitmix64_once(std::uint64_t x) noexcept {
    return SplitMix64(x).next();
}

} // namespace posetkit
