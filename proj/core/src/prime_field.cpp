#include "quadrica/prime_field.hpp"

namespace quadrica {

namespace {

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

} // namespace

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (std::uint64_t{1} << 31))
        throw std::invalid_argument("PrimeField: modulus must fit in 31 bits");
    if (!is_prime_u64(p))
        throw std::invalid_argument("PrimeField: modulus is not prime");
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a == 0) throw std::invalid_argument("PrimeField::inv: zero has no inverse");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(t);
}

} // namespace quadrica
