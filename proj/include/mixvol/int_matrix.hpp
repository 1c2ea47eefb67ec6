#pragma once

#include "mixvol/numeric.hpp"

#include <cstddef>

namespace mixvol {

/// Dense integer matrix over arbitrary-precision entries, row-major.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVec> &rows);
    static IntMatrix from_cols(const std::vector<IntVec> &cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int &at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int &at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntVec row(std::size_t i) const;
    IntVec col(std::size_t j) const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix &rhs) const;
    IntVec apply(const IntVec &v) const;  // matrix * column vector

    bool operator==(const IntMatrix &rhs) const { return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_; }

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    // row_i += k * row_j
    void add_row_multiple(std::size_t i, std::size_t j, const Int &k);
    void add_col_multiple(std::size_t i, std::size_t j, const Int &k);

    bool is_zero() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

struct SmithDecomposition {
    IntMatrix u;  // unimodular, rows x rows
    IntMatrix d;  // diagonal, d1 | d2 | ..., nonnegative
    IntMatrix v;  // unimodular, cols x cols
    std::size_t rank = 0;
};

/// U*M*V = D with U, V unimodular and D diagonal with divisibility d1 | d2 | ...
SmithDecomposition smith_decompose(const IntMatrix &m);

/// Canonical row-style Hermite normal form of the row lattice of m
/// (positive pivots, entries above a pivot reduced into [0, pivot)).
IntMatrix hermite_rows(const IntMatrix &m);

/// Canonical column-style Hermite normal form of the column lattice of m.
IntMatrix hermite_cols(const IntMatrix &m);

Int determinant(const IntMatrix &m);
std::size_t rank(const IntMatrix &m);

/// Exact inverse of a matrix with determinant +-1.
IntMatrix inverse_unimodular(const IntMatrix &m);

}  // namespace mixvol
