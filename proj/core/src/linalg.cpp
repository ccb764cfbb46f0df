#include "quadrica/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace quadrica {

namespace {

struct Rref {
    std::vector<std::vector<std::uint64_t>> rows; // nonzero reduced rows
    std::vector<std::size_t> pivot_cols;          // ascending
};

// Reduced row echelon form. Pivot selection: leftmost column, topmost row.
Rref rref(const FpMatrix& m) {
    const PrimeField& f = m.field();
    std::vector<std::vector<std::uint64_t>> w(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        w[r].resize(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) w[r][c] = m.at(r, c);
    }

    Rref out;
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < m.cols() && next_row < m.rows(); ++col) {
        std::size_t pivot_row = next_row;
        while (pivot_row < m.rows() && w[pivot_row][col] == 0) ++pivot_row;
        if (pivot_row == m.rows()) continue;
        std::swap(w[next_row], w[pivot_row]);

        std::uint64_t inv = f.inv(w[next_row][col]);
        for (std::size_t c = col; c < m.cols(); ++c)
            w[next_row][c] = f.mul(w[next_row][c], inv);

        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == next_row || w[r][col] == 0) continue;
            std::uint64_t factor = w[r][col];
            for (std::size_t c = col; c < m.cols(); ++c)
                w[r][c] = f.sub(w[r][c], f.mul(factor, w[next_row][c]));
        }
        out.pivot_cols.push_back(col);
        ++next_row;
    }
    w.resize(next_row);
    out.rows = std::move(w);
    return out;
}

} // namespace

std::size_t rank(const FpMatrix& m) { return rref(m).pivot_cols.size(); }

FpMatrix kernel_basis(const FpMatrix& m) {
    const PrimeField& f = m.field();
    Rref e = rref(m);
    const std::size_t n = m.cols();
    const std::size_t nullity = n - e.pivot_cols.size();

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

    std::vector<std::uint64_t> data(n * nullity, 0);
    std::size_t k = 0;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        data[free_col * nullity + k] = 1;
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
            data[e.pivot_cols[i] * nullity + k] = f.neg(e.rows[i][free_col]);
        ++k;
    }
    return FpMatrix::from_residues(n, nullity, f, std::move(data));
}

std::optional<std::vector<std::uint64_t>> solve(const FpMatrix& m,
                                                const std::vector<std::uint64_t>& rhs) {
    if (rhs.size() != m.rows())
        throw std::invalid_argument("solve: rhs length does not match row count");
    std::vector<std::int64_t> aug(m.rows() * (m.cols() + 1));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            aug[r * (m.cols() + 1) + c] = static_cast<std::int64_t>(m.at(r, c));
        aug[r * (m.cols() + 1) + m.cols()] = static_cast<std::int64_t>(rhs[r]);
    }
    FpMatrix augmented(m.rows(), m.cols() + 1, m.field(), std::move(aug));
    Rref e = rref(augmented);

    for (std::size_t c : e.pivot_cols)
        if (c == m.cols()) return std::nullopt; // pivot in the rhs column

    std::vector<std::uint64_t> x(m.cols(), 0);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
        x[e.pivot_cols[i]] = e.rows[i][m.cols()];
    return x;
}

FpMatrix coordinates_in_basis(const FpMatrix& basis, const FpMatrix& vectors) {
    if (basis.rows() != basis.cols())
        throw std::invalid_argument("coordinates_in_basis: basis not square");
    if (basis.rows() != vectors.rows())
        throw std::invalid_argument("coordinates_in_basis: row counts differ");
    Rref e = rref(hstack(basis, vectors));
    bool invertible = e.pivot_cols.size() == basis.cols() &&
                      (e.pivot_cols.empty() || e.pivot_cols.back() + 1 == basis.cols());
    if (!invertible)
        throw std::invalid_argument("coordinates_in_basis: basis is singular");
    std::vector<std::uint64_t> d(basis.cols() * vectors.cols());
    for (std::size_t r = 0; r < basis.cols(); ++r)
        for (std::size_t c = 0; c < vectors.cols(); ++c)
            d[r * vectors.cols() + c] = e.rows[r][basis.cols() + c];
    return FpMatrix::from_residues(basis.cols(), vectors.cols(), basis.field(),
                                   std::move(d));
}

FpMatrix column_space_basis(const FpMatrix& m) {
    Rref e = rref(m.transpose());
    std::size_t k = e.rows.size();
    std::vector<std::uint64_t> d(m.rows() * k);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < k; ++c) d[r * k + c] = e.rows[c][r];
    return FpMatrix::from_residues(m.rows(), k, m.field(), std::move(d));
}

namespace {

mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0)
        throw std::logic_error("bareiss: inexact division (internal error)");
    return q;
}

struct BareissEchelon {
    std::vector<std::vector<mpz_class>> rows;
    std::vector<std::size_t> pivot_cols; // ascending; pivots at (i, pivot_cols[i])
};

// Fraction-free forward elimination (Bareiss). `limit_cols` bounds the pivot
// search so an augmented column can be excluded.
BareissEchelon bareiss(std::vector<std::vector<mpz_class>> w, std::size_t cols,
                       std::size_t limit_cols) {
    BareissEchelon out;
    mpz_class prev(1);
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < limit_cols && next_row < w.size(); ++col) {
        std::size_t pivot_row = next_row;
        while (pivot_row < w.size() && w[pivot_row][col] == 0) ++pivot_row;
        if (pivot_row == w.size()) continue;
        std::swap(w[next_row], w[pivot_row]);

        const mpz_class pivot = w[next_row][col];
        for (std::size_t r = next_row + 1; r < w.size(); ++r) {
            for (std::size_t c = col + 1; c < cols; ++c)
                w[r][c] = exact_div(w[r][c] * pivot - w[r][col] * w[next_row][c], prev);
            w[r][col] = 0;
        }
        prev = pivot;
        out.pivot_cols.push_back(col);
        ++next_row;
    }
    out.rows = std::move(w);
    return out;
}

std::vector<std::vector<mpz_class>> to_rows(const IntMatrix& m) {
    std::vector<std::vector<mpz_class>> w(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        w[r].resize(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) w[r][c] = m.at(r, c);
    }
    return w;
}

} // namespace

std::size_t rank(const IntMatrix& m) {
    return bareiss(to_rows(m), m.cols(), m.cols()).pivot_cols.size();
}

std::optional<std::vector<mpq_class>> solve(const IntMatrix& m,
                                            const std::vector<mpz_class>& rhs) {
    if (rhs.size() != m.rows())
        throw std::invalid_argument("solve: rhs length does not match row count");
    std::vector<std::vector<mpz_class>> w(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        w[r].resize(m.cols() + 1);
        for (std::size_t c = 0; c < m.cols(); ++c) w[r][c] = m.at(r, c);
        w[r][m.cols()] = rhs[r];
    }
    BareissEchelon e = bareiss(std::move(w), m.cols() + 1, m.cols());

    // A row that is zero on the coefficient side but nonzero on the rhs
    // witnesses inconsistency.
    for (std::size_t r = e.pivot_cols.size(); r < e.rows.size(); ++r)
        if (e.rows[r][m.cols()] != 0) return std::nullopt;

    std::vector<mpq_class> x(m.cols(), mpq_class(0));
    for (std::size_t i = e.pivot_cols.size(); i-- > 0;) {
        std::size_t pc = e.pivot_cols[i];
        mpq_class acc(e.rows[i][m.cols()]);
        for (std::size_t c = pc + 1; c < m.cols(); ++c) {
            if (e.rows[i][c] == 0 || x[c] == 0) continue;
            acc -= mpq_class(e.rows[i][c]) * x[c];
        }
        x[pc] = acc / mpq_class(e.rows[i][pc]);
    }
    return x;
}

} // namespace quadrica
