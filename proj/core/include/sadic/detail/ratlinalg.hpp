#pragma once

#include "sadic/int_matrix.hpp"
#include "sadic/numeric.hpp"

#include <optional>
#include <vector>

namespace sadic::detail {

/// Exact rational matrix, row major, for the tower-lifting algebra where
/// nothing may be rounded.
struct QMat {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a;

    QMat() = default;
    QMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}

    Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static QMat from_int(const IntMatrix& m);
    static QMat from_columns(const std::vector<RatVec>& columns);

    RatVec apply(const RatVec& x) const;
    QMat transpose_times(const QMat& other) const; // this^T * other
    RatVec transpose_apply(const RatVec& x) const; // this^T * x
};

/// Exact rank (no tolerance: entries are exact).
int rank(QMat m);

/// Solves the square system m x = b exactly. Returns nullopt when m is
/// singular.
std::optional<RatVec> solve_square(QMat m, RatVec b);

/// Basis of the kernel of m, exact.
std::vector<RatVec> kernel_basis(QMat m);

/// Greedy maximal linearly independent subset of the given vectors, in
/// index order (deterministic). Returns the selected indices.
std::vector<int> independent_subset(const std::vector<RatVec>& vectors);

} // namespace sadic::detail
