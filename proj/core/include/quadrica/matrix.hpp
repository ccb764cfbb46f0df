#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "quadrica/prime_field.hpp"

namespace quadrica {

/// Dense row-major matrix over a prime field. Immutable after construction;
/// elimination routines work on internal copies.
class FpMatrix {
public:
    /// Entries are reduced into [0, p) on construction; entries.size() must
    /// equal rows*cols.
    FpMatrix(std::size_t rows, std::size_t cols, PrimeField field,
             std::vector<std::int64_t> entries);

    /// All-zero matrix.
    FpMatrix(std::size_t rows, std::size_t cols, PrimeField field);

    static FpMatrix identity(std::size_t n, PrimeField field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const PrimeField& field() const { return field_; }

    std::uint64_t at(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    const std::vector<std::uint64_t>& data() const { return data_; }

    FpMatrix transpose() const;

    bool operator==(const FpMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ &&
               field_ == other.field_ && data_ == other.data_;
    }

    /// Construction path for already-reduced residues (internal producers).
    static FpMatrix from_residues(std::size_t rows, std::size_t cols,
                                  PrimeField field,
                                  std::vector<std::uint64_t> residues);

private:
    FpMatrix(std::size_t rows, std::size_t cols, PrimeField field,
             std::vector<std::uint64_t> residues, int);

    std::size_t rows_;
    std::size_t cols_;
    PrimeField field_;
    std::vector<std::uint64_t> data_;
};

FpMatrix matmul(const FpMatrix& a, const FpMatrix& b);
FpMatrix hstack(const FpMatrix& a, const FpMatrix& b);
bool is_zero(const FpMatrix& m);

/// Dense row-major matrix with arbitrary-precision integer entries
/// (exact-integer mode of the linear algebra kernel).
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const mpz_class& at(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<mpz_class> data_;
};

} // namespace quadrica
