#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quadrica/matrix.hpp"

namespace quadrica {

/// Rank over the prime field. Deterministic; empty matrices have rank 0.
std::size_t rank(const FpMatrix& m);

/// Basis of the right null space, as columns of a cols x (cols - rank)
/// matrix. Columns are the standard free-variable vectors of the reduced
/// echelon form, ordered by ascending free column, so the result is
/// canonical for a given input.
FpMatrix kernel_basis(const FpMatrix& m);

/// Some x with m*x = rhs, or nullopt if the system is inconsistent. When the
/// solution space is positive-dimensional, free variables (non-pivot columns
/// of the elimination) are set to zero.
std::optional<std::vector<std::uint64_t>> solve(const FpMatrix& m,
                                                const std::vector<std::uint64_t>& rhs);

/// Coordinates of `vectors` in the column basis `basis`: the X with
/// basis*X = vectors. Throws if basis is not square invertible.
FpMatrix coordinates_in_basis(const FpMatrix& basis, const FpMatrix& vectors);

/// Basis of the column space (canonical: transposed reduced echelon rows).
FpMatrix column_space_basis(const FpMatrix& m);

/// Rank over the integers (= rank over Q), by Bareiss fraction-free
/// elimination with first-nonzero pivoting.
std::size_t rank(const IntMatrix& m);

/// Exact rational solution of m*x = rhs with free variables set to zero,
/// or nullopt if inconsistent over Q.
std::optional<std::vector<mpq_class>> solve(const IntMatrix& m,
                                            const std::vector<mpz_class>& rhs);

} // namespace quadrica
