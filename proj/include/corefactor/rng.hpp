#pragma once

#include <cstdint>
#include <random>

namespace corefactor {

// SplitMix64 step; used for seed derivation only.
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic per-(stream, index) seed derivation from a base seed, so that
// parallel trial execution order cannot affect the random streams.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index) {
    std::uint64_t z = splitmix64(base);
    z = splitmix64(z ^ (0xa0761d6478bd642fULL + stream));
    z = splitmix64(z ^ (0xe7037ed1a0b428dbULL + index));
    return z;
}

// All randomness flows through mt19937_64, whose output sequence is pinned by
// the C++ standard, so identical seeds reproduce identical graphs everywhere.
using Rng = std::mt19937_64;

// Uniform in [0,1) from the top 53 bits; avoids distribution classes whose
// output is implementation-defined.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound) by rejection; exact and portable.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace corefactor
