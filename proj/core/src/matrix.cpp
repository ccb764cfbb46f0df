#include "quadrica/matrix.hpp"

#include <stdexcept>

namespace quadrica {

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, PrimeField field,
                   std::vector<std::int64_t> entries)
    : rows_(rows), cols_(cols), field_(field) {
    if (entries.size() != rows * cols)
        throw std::invalid_argument("FpMatrix: entry count does not match shape");
    data_.resize(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        data_[i] = field_.reduce(entries[i]);
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, PrimeField field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, PrimeField field,
                   std::vector<std::uint64_t> residues, int)
    : rows_(rows), cols_(cols), field_(field), data_(std::move(residues)) {}

FpMatrix FpMatrix::from_residues(std::size_t rows, std::size_t cols,
                                 PrimeField field,
                                 std::vector<std::uint64_t> residues) {
    if (residues.size() != rows * cols)
        throw std::invalid_argument("FpMatrix: entry count does not match shape");
    for (std::uint64_t v : residues)
        if (v >= field.modulus())
            throw std::invalid_argument("FpMatrix: residue out of range");
    return FpMatrix(rows, cols, field, std::move(residues), 0);
}

FpMatrix FpMatrix::identity(std::size_t n, PrimeField field) {
    std::vector<std::uint64_t> d(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 1;
    return FpMatrix(n, n, field, std::move(d), 0);
}

FpMatrix FpMatrix::transpose() const {
    std::vector<std::uint64_t> d(rows_ * cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            d[c * rows_ + r] = at(r, c);
    return FpMatrix(cols_, rows_, field_, std::move(d), 0);
}

FpMatrix matmul(const FpMatrix& a, const FpMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: inner dimensions differ");
    if (!(a.field() == b.field()))
        throw std::invalid_argument("matmul: mismatched fields");
    const PrimeField& f = a.field();
    std::vector<std::uint64_t> d(a.rows() * b.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            std::uint64_t aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                d[i * b.cols() + j] =
                    f.add(d[i * b.cols() + j], f.mul(aik, b.at(k, j)));
        }
    return FpMatrix::from_residues(a.rows(), b.cols(), f, std::move(d));
}

FpMatrix hstack(const FpMatrix& a, const FpMatrix& b) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("hstack: row counts differ");
    if (!(a.field() == b.field()))
        throw std::invalid_argument("hstack: mismatched fields");
    std::size_t cols = a.cols() + b.cols();
    std::vector<std::uint64_t> d(a.rows() * cols);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) d[r * cols + c] = a.at(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c)
            d[r * cols + a.cols() + c] = b.at(r, c);
    }
    return FpMatrix::from_residues(a.rows(), cols, a.field(), std::move(d));
}

bool is_zero(const FpMatrix& m) {
    for (std::uint64_t v : m.data())
        if (v != 0) return false;
    return true;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                     std::vector<mpz_class> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols)
        throw std::invalid_argument("IntMatrix: entry count does not match shape");
}

} // namespace quadrica
