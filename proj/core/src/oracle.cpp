#include "quadrica/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "quadrica/formula.hpp"
#include "quadrica/linalg.hpp"

namespace quadrica {

FpMatrix constraint_matrix(const Configuration& c) {
    const PrimeField& f = c.field();
    const int n = c.ambient();
    const std::size_t cols = quadric_length(n);

    std::size_t rows = 0;
    for (const auto& s : c.spaces()) rows += quadric_length(s.dim());

    std::vector<std::uint64_t> data(rows * cols, 0);
    std::size_t row0 = 0;
    for (const auto& s : c.spaces()) {
        const FpMatrix& b = s.span();
        const int m = s.dim();
        // The column for x_i x_j restricted to this component is the
        // expansion of (row_i(B) . t)(row_j(B) . t) in the t-monomials.
        std::vector<std::vector<std::uint64_t>> brows(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) {
            brows[i].resize(static_cast<std::size_t>(m) + 1);
            for (int a = 0; a <= m; ++a) brows[i][a] = b.at(i, a);
        }
        for (int i = 0; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                QuadricCoeffs q = product_of_forms(brows[i], brows[j], f);
                const std::size_t col = monomial_index(n, i, j);
                for (std::size_t k = 0; k < q.coeffs.size(); ++k)
                    data[(row0 + k) * cols + col] = q.coeffs[k];
            }
        row0 += quadric_length(m);
    }
    return FpMatrix::from_residues(rows, cols, f, std::move(data));
}

std::int64_t dim_I2_exact(const Configuration& c) {
    return static_cast<std::int64_t>(quadric_length(c.ambient())) -
           static_cast<std::int64_t>(rank(constraint_matrix(c)));
}

OracleReport generic_dim_I2(const WeightVector& w, int trials,
                            std::uint64_t prime, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("generic_dim_I2: trials must be >= 1");
    std::vector<std::int64_t> dims;
    dims.reserve(static_cast<std::size_t>(trials));
    for (int t = 0; t < trials; ++t)
        dims.push_back(dim_I2_exact(random_configuration(w, prime, seed + static_cast<std::uint64_t>(t))));
    std::int64_t oracle = *std::min_element(dims.begin(), dims.end());
    std::int64_t formula = expected_dim_I2(w).dim_I2;
    return {w, prime, seed, trials, std::move(dims), oracle, formula, oracle == formula};
}

std::vector<QuadricCoeffs> kernel_quadrics(const Configuration& c) {
    FpMatrix k = kernel_basis(constraint_matrix(c));
    std::vector<QuadricCoeffs> out;
    out.reserve(k.cols());
    for (std::size_t col = 0; col < k.cols(); ++col) {
        std::vector<std::uint64_t> coeffs(k.rows());
        for (std::size_t r = 0; r < k.rows(); ++r) coeffs[r] = k.at(r, col);
        out.emplace_back(c.ambient(), std::move(coeffs));
    }
    return out;
}

} // namespace quadrica
