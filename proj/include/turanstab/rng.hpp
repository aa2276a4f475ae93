#pragma once

#include <cstdint>

namespace turanstab {

/// splitmix64 (Steele/Lea/Flood): the project-wide RNG. The sequence is pinned
/// by the algorithm itself, so a 64-bit seed identifies the same corpus on any
/// platform or language.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [0, bound), bound >= 1. Rejection keeps it exactly uniform.
    std::uint64_t bounded(std::uint64_t bound) {
        std::uint64_t reject_below = (0 - bound) % bound;  // 2^64 mod bound
        while (true) {
            std::uint64_t x = next();
            if (x >= reject_below) return x % bound;
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace turanstab
