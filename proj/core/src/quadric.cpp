#include "quadrica/quadric.hpp"

#include <stdexcept>

#include "quadrica/linalg.hpp"

namespace quadrica {

std::size_t quadric_length(int n) {
    if (n < 0) throw std::invalid_argument("quadric_length: negative ambient dimension");
    auto k = static_cast<std::size_t>(n) + 2;
    return k * (k - 1) / 2;
}

std::size_t monomial_index(int n, int i, int j) {
    if (i > j || i < 0 || j > n)
        throw std::invalid_argument("monomial_index: need 0 <= i <= j <= n");
    // Rows of the upper triangle laid out in order: row i starts after
    // (n+1) + n + ... + (n+2-i) previous entries.
    auto si = static_cast<std::size_t>(i);
    auto sn = static_cast<std::size_t>(n);
    return si * (2 * sn + 3 - si) / 2 + static_cast<std::size_t>(j - i);
}

QuadricCoeffs::QuadricCoeffs(int ambient, std::vector<std::uint64_t> c)
    : n(ambient), coeffs(std::move(c)) {
    if (coeffs.size() != quadric_length(n))
        throw std::invalid_argument("QuadricCoeffs: wrong coefficient count");
}

QuadricCoeffs product_of_forms(const std::vector<std::uint64_t>& u,
                               const std::vector<std::uint64_t>& v,
                               const PrimeField& f) {
    if (u.size() != v.size() || u.empty())
        throw std::invalid_argument("product_of_forms: mismatched form lengths");
    const int n = static_cast<int>(u.size()) - 1;
    std::vector<std::uint64_t> c(quadric_length(n), 0);
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            std::uint64_t t = f.mul(u[i], v[j]);
            if (i != j) t = f.add(t, f.mul(u[j], v[i]));
            c[monomial_index(n, i, j)] = t;
        }
    return QuadricCoeffs(n, std::move(c));
}

QuadricCoeffs pullback(const QuadricCoeffs& q, const FpMatrix& b) {
    const PrimeField& f = b.field();
    if (b.rows() != static_cast<std::size_t>(q.n) + 1)
        throw std::invalid_argument("pullback: substitution rows do not match ambient");
    const int m = static_cast<int>(b.cols()) - 1;
    std::vector<std::uint64_t> out(quadric_length(m), 0);
    for (int i = 0; i <= q.n; ++i)
        for (int j = i; j <= q.n; ++j) {
            std::uint64_t qij = q.coeffs[monomial_index(q.n, i, j)];
            if (qij == 0) continue;
            // x_i x_j pulls back to (sum_a B[i][a] t_a)(sum_b B[j][b] t_b).
            for (int a = 0; a <= m; ++a)
                for (int c = a; c <= m; ++c) {
                    std::uint64_t t = f.mul(b.at(i, a), b.at(j, c));
                    if (a != c) t = f.add(t, f.mul(b.at(i, c), b.at(j, a)));
                    std::size_t k = monomial_index(m, a, c);
                    out[k] = f.add(out[k], f.mul(qij, t));
                }
        }
    return QuadricCoeffs(m, std::move(out));
}

std::size_t gram_rank(const QuadricCoeffs& q, const PrimeField& f) {
    const std::size_t n1 = static_cast<std::size_t>(q.n) + 1;
    std::vector<std::uint64_t> d(n1 * n1, 0);
    // A + A^T for the upper-triangular A with the raw coefficients; over an
    // odd modulus this has the same rank as the Gram matrix (A + A^T)/2.
    for (int i = 0; i <= q.n; ++i)
        for (int j = i; j <= q.n; ++j) {
            std::uint64_t c = q.coeffs[monomial_index(q.n, i, j)];
            auto si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
            d[si * n1 + sj] = f.add(d[si * n1 + sj], c);
            d[sj * n1 + si] = f.add(d[sj * n1 + si], c);
        }
    return rank(FpMatrix::from_residues(n1, n1, f, std::move(d)));
}

} // namespace quadrica
