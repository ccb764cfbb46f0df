#pragma once

#include <cstdint>

#include "quadrica/prime_field.hpp"

namespace quadrica {

/// Stateless counter-based generator (splitmix64 finalizer over an affine
/// counter walk). Streams are keyed so independent components of a sampled
/// object never share a counter sequence.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(mix(mix(seed) ^ (stream + 0x9E3779B97F4A7C15ULL))), counter_(0) {}

    std::uint64_t next() { return mix(key_ + (++counter_) * 0x9E3779B97F4A7C15ULL); }

    /// Uniform residue in [0, p) by rejection from 63-bit draws (no modulo
    /// bias).
    std::uint64_t next_residue(const PrimeField& f) {
        const std::uint64_t p = f.modulus();
        const std::uint64_t span = (std::uint64_t{1} << 63);
        const std::uint64_t limit = span - span % p;
        for (;;) {
            std::uint64_t r = next() >> 1;
            if (r < limit) return r % p;
        }
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_;
};

} // namespace quadrica
