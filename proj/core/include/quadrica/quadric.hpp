#pragma once

#include <cstdint>
#include <vector>

#include "quadrica/matrix.hpp"

namespace quadrica {

/// Number of degree-2 monomials in n+1 variables: C(n+2,2).
std::size_t quadric_length(int n);

/// Index of the monomial x_i x_j (i <= j) in the fixed coefficient order:
/// lexicographic on (i, j), i.e. (0,0), (0,1), ..., (0,n), (1,1), ..., (n,n).
std::size_t monomial_index(int n, int i, int j);

/// Coefficient vector of a quadratic form on P^n in the fixed monomial
/// order. This ordering is the bit-exact contract for kernel output, witness
/// files and the decomposition JSON schema.
struct QuadricCoeffs {
    int n;
    std::vector<std::uint64_t> coeffs; // length C(n+2,2), residues mod p

    QuadricCoeffs(int ambient, std::vector<std::uint64_t> c);
};

/// Coefficients of the product of two linear forms (given as coefficient
/// vectors of length n+1).
QuadricCoeffs product_of_forms(const std::vector<std::uint64_t>& u,
                               const std::vector<std::uint64_t>& v,
                               const PrimeField& f);

/// Pullback of the form under the substitution x = B t: the quadratic form
/// in the t-variables, where B is (n+1) x (m+1). Computed by direct
/// expansion (no polarization, so no division by 2).
QuadricCoeffs pullback(const QuadricCoeffs& q, const FpMatrix& b);

/// Rank of the symmetric Gram matrix of the form (diagnostic; assumes an
/// odd modulus, where rank(A + A^T) equals the Gram rank).
std::size_t gram_rank(const QuadricCoeffs& q, const PrimeField& f);

} // namespace quadrica
