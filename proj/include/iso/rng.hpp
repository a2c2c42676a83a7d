#pragma once

#include <cstdint>

namespace iso {

/// Self-contained PRNG so generated instances are reproducible across
/// platforms and ports. Stream specification, with all arithmetic mod 2^64:
///   state <- state + 0x9E3779B97F4A7C15
///   z <- state; z <- (z ^ z>>30) * 0xBF58476D1CE4E5B9
///   z <- (z ^ z>>27) * 0x94D049BB133111EB
///   output  z ^ z>>31
/// below(b) reduces by plain modulo; unit() keeps the top 53 bits.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

    /// Uniform in [0, 1) with 53 bits of precision.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

    /// Decorrelated stream for item `index` under a master seed.
    static std::uint64_t derive(std::uint64_t master, std::uint64_t index) {
        SplitMix64 mix(master ^ (index * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL));
        return mix.next();
    }

private:
    std::uint64_t state_;
};

}  // namespace iso
