#pragma once

#include <cstdint>
#include <stdexcept>

namespace quadrica {

/// Arithmetic context for the prime field Z/p with a word-size modulus.
///
/// The modulus is restricted to p < 2^31 so that every product of two
/// residues fits in a 64-bit intermediate. Primality is checked by trial
/// division at construction.
class PrimeField {
public:
    static constexpr std::uint64_t kDefaultPrime = 2147483647; // 2^31 - 1

    explicit PrimeField(std::uint64_t p = kDefaultPrime);

    std::uint64_t modulus() const { return p_; }
    bool odd() const { return p_ != 2; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return (a * b) % p_; // a, b < 2^31 so a*b < 2^62
    }

    /// Multiplicative inverse of a nonzero residue (extended Euclid).
    std::uint64_t inv(std::uint64_t a) const;

    /// Canonical residue of a (possibly negative) machine integer.
    std::uint64_t reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += static_cast<std::int64_t>(p_);
        return static_cast<std::uint64_t>(r);
    }

    bool operator==(const PrimeField& other) const { return p_ == other.p_; }

private:
    std::uint64_t p_;
};

} // namespace quadrica
