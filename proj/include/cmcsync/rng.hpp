#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace cmcsync {

/// Seeded random stream. One stream per logical source; never shared
/// across threads. The draw path is fixed (inverse transforms on raw
/// 64-bit output) so sequences are reproducible across platforms and
/// standard-library versions.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    /// Derive an independent stream for (seed, lane). Lanes are decorrelated
    /// by splitmix-style mixing of the lane index into the seed.
    static RngStream derive(std::uint64_t seed, std::uint64_t lane) {
        std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (lane + 1);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        z ^= z >> 31;
        return RngStream(z);
    }

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Exponential with the given mean (inverse transform).
    double exponential(double mean) {
        return -mean * std::log1p(-uniform());
    }

    std::uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace cmcsync
