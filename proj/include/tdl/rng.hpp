#pragma once

#include <cstdint>

namespace tdl {

/// SplitMix64. Fixed algorithm so seeded runs are byte-identical across
/// platforms and standard-library versions (std::uniform_int_distribution
/// makes no such promise).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound) by masked rejection.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t mask = bound - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        for (;;) {
            std::uint64_t v = next() & mask;
            if (v < bound) return v;
        }
    }

    /// Independent stream for shard `index` of a seeded run.
    static SplitMix64 for_shard(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 mix(seed ^ (0xa0761d6478bd642full * (index + 1)));
        mix.next();
        return mix;
    }

private:
    std::uint64_t state_;
};

}  // namespace tdl
