#pragma once

#include <cstdint>

namespace superstring {

/// SplitMix64 stream. Fully specified, so identical seeds give identical
/// draws on every platform and compiler — std::uniform_int_distribution
/// would not.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, n) by rejection, bias-free.
    std::uint64_t uniform_below(std::uint64_t n) {
        const std::uint64_t limit = n * (~0ULL / n);
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return x % n;
    }

private:
    std::uint64_t state_;
};

}  // namespace superstring
