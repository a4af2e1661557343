#pragma once

// Reproducible random streams.
//
// Each stream is a std::mt19937_64 (whose output sequence is fixed by the C++
// standard) seeded from splitmix64(seed, stream). Real variates are built from
// the top 53 bits directly instead of std::uniform_real_distribution, whose
// algorithm is implementation-defined. Sample i of a search always uses stream
// i, so results do not depend on how work is split across threads.

#include <cstdint>
#include <numbers>
#include <random>

namespace booth {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class random_stream {
public:
    random_stream(std::uint64_t seed, std::uint64_t stream)
        : engine_(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL)))
    {
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform on {0, ..., n-1} by rejection, no modulo bias.
    std::uint64_t below(std::uint64_t n)
    {
        const std::uint64_t limit = (~std::uint64_t{0}) - ((~std::uint64_t{0}) % n);
        std::uint64_t x = engine_();
        while (x >= limit) {
            x = engine_();
        }
        return x % n;
    }

    double angle() { return 2.0 * std::numbers::pi * uniform(); }

private:
    std::mt19937_64 engine_;
};

} // namespace booth
