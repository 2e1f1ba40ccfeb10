#pragma once

#include <vector>

namespace sadic::detail {

/// Column-major dense double matrix for the tiny systems that show up in
/// cone analysis (dimensions bounded by alphabet sizes). Deterministic,
/// absolute-tolerance routines; nothing here is meant for large or
/// ill-scaled problems.
struct DMat {
    int rows = 0;
    int cols = 0;
    std::vector<double> a; // column major

    DMat() = default;
    DMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

    double& at(int i, int j) { return a[static_cast<size_t>(j) * rows + i]; }
    double at(int i, int j) const { return a[static_cast<size_t>(j) * rows + i]; }

    static DMat from_columns(const std::vector<std::vector<double>>& cols);
};

/// Rank by Gaussian elimination with partial pivoting; a pivot with
/// absolute value <= eps counts as zero.
int rank_with_tolerance(DMat m, double eps);

/// Least-squares solve min ||A x - b||_2 via normal equations (fine at
/// these sizes). Returns false when the normal matrix is numerically
/// singular at tolerance eps.
bool least_squares(const DMat& a, const std::vector<double>& b, double eps,
                   std::vector<double>* x);

struct NnlsResult {
    std::vector<double> x; // x >= 0
    double residual = 0;   // ||A x - b||_2
    bool converged = false;
};

/// Nonnegative least squares min ||A x - b||_2 s.t. x >= 0, Lawson-Hanson
/// active set. Deterministic tie-breaking (lowest index enters first).
NnlsResult nnls(const DMat& a, const std::vector<double>& b, int max_iter = 200);

} // namespace sadic::detail
