#pragma once

#include <bit>
#include <cstdint>

namespace cubeiso {

using std::uint64_t;

inline constexpr uint64_t bit_reverse64(uint64_t x) {
    x = ((x >> 1) & 0x5555555555555555ull) | ((x & 0x5555555555555555ull) << 1);
    x = ((x >> 2) & 0x3333333333333333ull) | ((x & 0x3333333333333333ull) << 2);
    x = ((x >> 4) & 0x0f0f0f0f0f0f0f0full) | ((x & 0x0f0f0f0f0f0f0f0full) << 4);
    x = ((x >> 8) & 0x00ff00ff00ff00ffull) | ((x & 0x00ff00ff00ff00ffull) << 8);
    x = ((x >> 16) & 0x0000ffff0000ffffull) | ((x & 0x0000ffff0000ffffull) << 16);
    return (x >> 32) | (x << 32);
}

// Bit positions p in [0,64) whose bit b is clear, for b in [0,6].
// low_half_mask(6) is all ones.
inline constexpr uint64_t low_half_mask(int b) {
    constexpr uint64_t masks[7] = {
        0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
        0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
        0xffffffffffffffffull,
    };
    return masks[b];
}

// Fixed generator for every seeded feature of the toolkit, so that runs are
// replayable from the seed alone.
struct SplitMix64 {
    uint64_t state;

    explicit constexpr SplitMix64(uint64_t seed) : state(seed) {}

    constexpr uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, bound); bound must be nonzero.
    uint64_t below(uint64_t bound) {
        const uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }
};

// Per-item substream seed: identical for a given (seed, index) no matter how
// work is sharded across threads.
inline constexpr uint64_t derive_seed(uint64_t seed, uint64_t index) {
    SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ull * (index + 1)));
    g.next();
    return g.next();
}

}  // namespace cubeiso
