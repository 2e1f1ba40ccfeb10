#include "sadic/detail/smalllinalg.hpp"

#include <cmath>
#include <stdexcept>

namespace sadic::detail {

DMat DMat::from_columns(const std::vector<std::vector<double>>& cols) {
    if (cols.empty()) return DMat();
    DMat m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols; ++j) {
        if (cols[static_cast<size_t>(j)].size() != static_cast<size_t>(m.rows))
            throw std::invalid_argument("ragged column list");
        for (int i = 0; i < m.rows; ++i) m.at(i, j) = cols[static_cast<size_t>(j)][static_cast<size_t>(i)];
    }
    return m;
}

int rank_with_tolerance(DMat m, double eps) {
    int rank = 0;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pivot = row;
        for (int i = row + 1; i < m.rows; ++i)
            if (std::fabs(m.at(i, col)) > std::fabs(m.at(pivot, col))) pivot = i;
        if (std::fabs(m.at(pivot, col)) <= eps) continue;
        if (pivot != row)
            for (int j = col; j < m.cols; ++j) std::swap(m.at(row, j), m.at(pivot, j));
        for (int i = row + 1; i < m.rows; ++i) {
            double f = m.at(i, col) / m.at(row, col);
            for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

namespace {

/// Solves the square system G x = b in place by Gaussian elimination with
/// partial pivoting; returns false on a pivot <= eps.
bool solve_square(DMat g, std::vector<double> b, double eps, std::vector<double>* x) {
    const int n = g.rows;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int i = col + 1; i < n; ++i)
            if (std::fabs(g.at(i, col)) > std::fabs(g.at(pivot, col))) pivot = i;
        if (std::fabs(g.at(pivot, col)) <= eps) return false;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(g.at(col, j), g.at(pivot, j));
            std::swap(b[static_cast<size_t>(col)], b[static_cast<size_t>(pivot)]);
        }
        for (int i = col + 1; i < n; ++i) {
            double f = g.at(i, col) / g.at(col, col);
            for (int j = col; j < n; ++j) g.at(i, j) -= f * g.at(col, j);
            b[static_cast<size_t>(i)] -= f * b[static_cast<size_t>(col)];
        }
    }
    x->assign(static_cast<size_t>(n), 0.0);
    for (int i = n - 1; i >= 0; --i) {
        double s = b[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j) s -= g.at(i, j) * (*x)[static_cast<size_t>(j)];
        (*x)[static_cast<size_t>(i)] = s / g.at(i, i);
    }
    return true;
}

} // namespace

bool least_squares(const DMat& a, const std::vector<double>& b, double eps,
                   std::vector<double>* x) {
    if (b.size() != static_cast<size_t>(a.rows))
        throw std::invalid_argument("least_squares: rhs size mismatch");
    DMat g(a.cols, a.cols);
    std::vector<double> rhs(static_cast<size_t>(a.cols), 0.0);
    for (int i = 0; i < a.cols; ++i) {
        for (int j = 0; j < a.cols; ++j) {
            double s = 0;
            for (int k = 0; k < a.rows; ++k) s += a.at(k, i) * a.at(k, j);
            g.at(i, j) = s;
        }
        double s = 0;
        for (int k = 0; k < a.rows; ++k) s += a.at(k, i) * b[static_cast<size_t>(k)];
        rhs[static_cast<size_t>(i)] = s;
    }
    return solve_square(std::move(g), std::move(rhs), eps, x);
}

NnlsResult nnls(const DMat& a, const std::vector<double>& b, int max_iter) {
    if (b.size() != static_cast<size_t>(a.rows))
        throw std::invalid_argument("nnls: rhs size mismatch");
    const int n = a.cols;
    NnlsResult result;
    result.x.assign(static_cast<size_t>(n), 0.0);

    std::vector<bool> passive(static_cast<size_t>(n), false);
    std::vector<double> x(static_cast<size_t>(n), 0.0);
    std::vector<double> resid(b);

    auto recompute_residual = [&]() {
        resid = b;
        for (int j = 0; j < n; ++j) {
            if (x[static_cast<size_t>(j)] == 0.0) continue;
            for (int i = 0; i < a.rows; ++i)
                resid[static_cast<size_t>(i)] -= a.at(i, j) * x[static_cast<size_t>(j)];
        }
    };

    // Solve the unconstrained least squares on the passive set.
    auto solve_passive = [&](std::vector<double>* z) -> bool {
        std::vector<int> idx;
        for (int j = 0; j < n; ++j)
            if (passive[static_cast<size_t>(j)]) idx.push_back(j);
        if (idx.empty()) { z->assign(static_cast<size_t>(n), 0.0); return true; }
        DMat sub(a.rows, static_cast<int>(idx.size()));
        for (size_t j = 0; j < idx.size(); ++j)
            for (int i = 0; i < a.rows; ++i) sub.at(i, static_cast<int>(j)) = a.at(i, idx[j]);
        std::vector<double> zi;
        if (!least_squares(sub, b, 1e-14, &zi)) return false;
        z->assign(static_cast<size_t>(n), 0.0);
        for (size_t j = 0; j < idx.size(); ++j) (*z)[static_cast<size_t>(idx[j])] = zi[j];
        return true;
    };

    const double grad_tol = 1e-12;
    for (int iter = 0; iter < max_iter; ++iter) {
        recompute_residual();
        // Gradient of 1/2||Ax-b||^2 is -A^T resid; pick the most negative
        // component among the active (zero) variables.
        int best = -1;
        double best_w = grad_tol;
        for (int j = 0; j < n; ++j) {
            if (passive[static_cast<size_t>(j)]) continue;
            double w = 0;
            for (int i = 0; i < a.rows; ++i) w += a.at(i, j) * resid[static_cast<size_t>(i)];
            if (w > best_w) { best_w = w; best = j; }
        }
        if (best < 0) break;
        passive[static_cast<size_t>(best)] = true;

        std::vector<double> z;
        while (true) {
            if (!solve_passive(&z)) {
                // Numerically dependent column: drop the newest entrant.
                passive[static_cast<size_t>(best)] = false;
                z = x;
                break;
            }
            double min_z = 0;
            bool all_pos = true;
            for (int j = 0; j < n; ++j) {
                if (passive[static_cast<size_t>(j)] && z[static_cast<size_t>(j)] <= 0) {
                    all_pos = false;
                    min_z = std::min(min_z, z[static_cast<size_t>(j)]);
                }
            }
            if (all_pos) break;
            // Step back to the boundary and retire blocking variables.
            double alpha = 1.0;
            for (int j = 0; j < n; ++j) {
                if (!passive[static_cast<size_t>(j)] || z[static_cast<size_t>(j)] > 0) continue;
                double denom = x[static_cast<size_t>(j)] - z[static_cast<size_t>(j)];
                if (denom > 0) alpha = std::min(alpha, x[static_cast<size_t>(j)] / denom);
            }
            for (int j = 0; j < n; ++j) {
                if (!passive[static_cast<size_t>(j)]) continue;
                x[static_cast<size_t>(j)] += alpha * (z[static_cast<size_t>(j)] - x[static_cast<size_t>(j)]);
                if (x[static_cast<size_t>(j)] <= 1e-14) {
                    x[static_cast<size_t>(j)] = 0;
                    passive[static_cast<size_t>(j)] = false;
                }
            }
        }
        x = z;
        result.converged = true;
    }

    result.x = x;
    recompute_residual();
    double r2 = 0;
    for (double r : resid) r2 += r * r;
    result.residual = std::sqrt(r2);
    result.converged = true;
    return result;
}

} // namespace sadic::detail
