#pragma once

#include <cstdint>
#include <vector>

#include "quadrica/arrangement.hpp"
#include "quadrica/quadric.hpp"
#include "quadrica/weight_vector.hpp"

namespace quadrica {

/// Result of a seeded oracle run: exact kernel dimensions for `trials`
/// random configurations, their minimum, and the comparison against the
/// closed-form answer. Every recorded number is replayable from the stored
/// (prime, seed, trials).
struct OracleReport {
    WeightVector weight;
    std::uint64_t prime;
    std::uint64_t seed;
    int trials;
    std::vector<std::int64_t> per_trial_dims;
    std::int64_t oracle_dim;  // minimum over trials
    std::int64_t formula_dim; // closed-form answer
    bool agree;
};

/// The linear system "a quadric vanishes on every component": one row per
/// degree-2 monomial of each component's restriction, one column per
/// degree-2 monomial of the ambient space. Shape sum_i C(m_i+2,2) by
/// C(n+2,2).
FpMatrix constraint_matrix(const Configuration& c);

/// dim (I_Lambda)_2 for this exact configuration (generic or not):
/// C(n+2,2) - rank of the constraint system.
std::int64_t dim_I2_exact(const Configuration& c);

/// Monte Carlo estimate of the generic value: minimum of dim_I2_exact over
/// `trials` samples seeded seed, seed+1, ..., compared with expected_dim_I2.
OracleReport generic_dim_I2(const WeightVector& w, int trials,
                            std::uint64_t prime, std::uint64_t seed);

/// Kernel basis of the constraint system, repackaged as quadric coefficient
/// vectors (a basis of the degree-2 ideal).
std::vector<QuadricCoeffs> kernel_quadrics(const Configuration& c);

} // namespace quadrica
