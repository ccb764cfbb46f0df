#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "quadrica/arrangement.hpp"
#include "quadrica/prime_field.hpp"

namespace quadrica {

/// One family of linear forms l_{i,0}, ..., l_{i,k} in n+1 dual variables,
/// given by raw integer coefficient vectors. Forms need not be independent;
/// ranks are computed, never assumed.
struct FormFamily {
    int n;
    std::vector<std::vector<std::int64_t>> forms; // each of length n+1

    FormFamily(int ambient, std::vector<std::vector<std::int64_t>> fs);
};

struct StarResult {
    bool holds;
    std::int64_t defect; // C(n+2,2) - rank of the pairwise-product matrix
};

/// The linear space cut out by the forms annihilating this family: the
/// projectivized span of the coefficient vectors. Projective dimension is
/// the family rank minus one.
LinearSpace annihilator_space(const FormFamily& fam, const PrimeField& f);

/// Configuration of the annihilator spaces of all families (duplicates
/// merged). Errors if a family spans the whole ambient space.
Configuration annihilator_configuration(const std::vector<FormFamily>& families,
                                        const PrimeField& f);

/// Decides whether every quadratic form is a sum of quadratics in the
/// individual families (the d = 2 vector-space equality). The defect equals
/// dim (I_Lambda)_2 of the annihilator configuration.
StarResult star_holds_d2(const std::vector<FormFamily>& families,
                         const PrimeField& f);

/// Same decision with exact integer arithmetic (rank over Q).
StarResult star_holds_d2_exact(const std::vector<FormFamily>& families);

/// Witness that the target form is a sum of quadratics in the families:
/// for each family, the indices of an independent subset of its forms and a
/// symmetric matrix G with f_i(z) = z^T G z evaluated at those forms. The
/// reconstructed target is recomputed from the witness for audit.
struct PrimeWitness {
    std::uint64_t prime;
    std::vector<std::vector<std::size_t>> independent;
    std::vector<std::vector<std::vector<std::uint64_t>>> grams;
    std::vector<std::uint64_t> reconstructed;
};

struct ExactWitness {
    std::vector<std::vector<std::size_t>> independent;
    std::vector<std::vector<std::vector<mpq_class>>> grams;
    std::vector<mpq_class> reconstructed;
};

/// Solve for a decomposition of the target (coefficients in the fixed
/// quadric monomial order) over the prime field; free variables of the
/// underdetermined system are set to zero. Requires an odd modulus.
std::optional<PrimeWitness> decompose_quadric(const std::vector<std::int64_t>& target,
                                              const std::vector<FormFamily>& families,
                                              const PrimeField& f);

/// Exact-rational decomposition (final authority for integer user input).
std::optional<ExactWitness> decompose_quadric_exact(const std::vector<std::int64_t>& target,
                                                    const std::vector<FormFamily>& families);

} // namespace quadrica
