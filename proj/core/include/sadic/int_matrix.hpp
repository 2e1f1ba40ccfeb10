#pragma once

#include "sadic/numeric.hpp"

#include <vector>

namespace sadic {

/// Dense matrix of arbitrary-precision integers, row major. Incidence
/// matrices and their telescoped products live here; no entry is ever
/// rounded.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Int& at(int i, int j) const { return entries_[index(i, j)]; }
    Int& at(int i, int j) { return entries_[index(i, j)]; }

    IntMatrix multiply(const IntMatrix& other) const;
    IntMatrix pow(int exponent) const;

    Int column_sum(int j) const;
    Int min_column_sum() const;
    Int total_sum() const;

    bool is_square() const { return rows_ == cols_; }
    bool all_positive() const;
    bool has_zero_column() const;

    /// Exact determinant (Bareiss fraction-free elimination). Throws
    /// std::invalid_argument on a non-square matrix.
    Int determinant() const;

    /// y = M * x (matrix-vector product over exact rationals).
    RatVec apply(const RatVec& x) const;

    bool operator==(const IntMatrix& other) const;
    bool operator!=(const IntMatrix& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    size_t index(int i, int j) const;

    int rows_, cols_;
    std::vector<Int> entries_;
};

} // namespace sadic
