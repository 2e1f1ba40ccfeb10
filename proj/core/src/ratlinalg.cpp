#include "sadic/detail/ratlinalg.hpp"

#include <stdexcept>

namespace sadic::detail {

QMat QMat::from_int(const IntMatrix& m) {
    QMat q(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) q.at(i, j) = Rat(m.at(i, j));
    return q;
}

QMat QMat::from_columns(const std::vector<RatVec>& columns) {
    if (columns.empty()) return QMat();
    QMat q(static_cast<int>(columns[0].size()), static_cast<int>(columns.size()));
    for (int j = 0; j < q.cols; ++j) {
        if (columns[static_cast<size_t>(j)].size() != static_cast<size_t>(q.rows))
            throw std::invalid_argument("ragged column list");
        for (int i = 0; i < q.rows; ++i) q.at(i, j) = columns[static_cast<size_t>(j)][static_cast<size_t>(i)];
    }
    return q;
}

RatVec QMat::apply(const RatVec& x) const {
    if (x.size() != static_cast<size_t>(cols))
        throw std::invalid_argument("matrix-vector dimension mismatch");
    RatVec y(static_cast<size_t>(rows), Rat(0));
    for (int i = 0; i < rows; ++i) {
        Rat s = 0;
        for (int j = 0; j < cols; ++j) s += at(i, j) * x[static_cast<size_t>(j)];
        y[static_cast<size_t>(i)] = s;
    }
    return y;
}

QMat QMat::transpose_times(const QMat& other) const {
    if (rows != other.rows) throw std::invalid_argument("transpose product dimension mismatch");
    QMat out(cols, other.cols);
    for (int i = 0; i < cols; ++i)
        for (int j = 0; j < other.cols; ++j) {
            Rat s = 0;
            for (int k = 0; k < rows; ++k) s += at(k, i) * other.at(k, j);
            out.at(i, j) = s;
        }
    return out;
}

RatVec QMat::transpose_apply(const RatVec& x) const {
    if (x.size() != static_cast<size_t>(rows))
        throw std::invalid_argument("transpose-vector dimension mismatch");
    RatVec y(static_cast<size_t>(cols), Rat(0));
    for (int j = 0; j < cols; ++j) {
        Rat s = 0;
        for (int i = 0; i < rows; ++i) s += at(i, j) * x[static_cast<size_t>(i)];
        y[static_cast<size_t>(j)] = s;
    }
    return y;
}

namespace {

/// Row echelon form in place; returns pivot columns.
std::vector<int> echelon(QMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pivot = -1;
        for (int i = row; i < m.rows; ++i) {
            if (m.at(i, col) != 0) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < m.cols; ++j) swap(m.at(row, j), m.at(pivot, j));
        Rat inv = m.at(row, col);
        for (int j = 0; j < m.cols; ++j) m.at(row, j) /= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (int j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

int rank(QMat m) { return static_cast<int>(echelon(m).size()); }

std::optional<RatVec> solve_square(QMat m, RatVec b) {
    if (m.rows != m.cols || b.size() != static_cast<size_t>(m.rows))
        throw std::invalid_argument("solve_square needs a square system");
    const int n = m.rows;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i) {
            if (m.at(i, col) != 0) { pivot = i; break; }
        }
        if (pivot < 0) return std::nullopt;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) swap(m.at(col, j), m.at(pivot, j));
            swap(b[static_cast<size_t>(col)], b[static_cast<size_t>(pivot)]);
        }
        for (int i = col + 1; i < n; ++i) {
            if (m.at(i, col) == 0) continue;
            Rat f = m.at(i, col) / m.at(col, col);
            for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
            b[static_cast<size_t>(i)] -= f * b[static_cast<size_t>(col)];
        }
    }
    RatVec x(static_cast<size_t>(n), Rat(0));
    for (int i = n - 1; i >= 0; --i) {
        Rat s = b[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j) s -= m.at(i, j) * x[static_cast<size_t>(j)];
        x[static_cast<size_t>(i)] = s / m.at(i, i);
    }
    return x;
}

std::vector<RatVec> kernel_basis(QMat m) {
    const int n = m.cols;
    std::vector<int> pivots = echelon(m);
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;

    std::vector<RatVec> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        RatVec v(static_cast<size_t>(n), Rat(0));
        v[static_cast<size_t>(free)] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) {
            // After full reduction, row r reads x_{pivot[r]} + sum over free
            // columns of coeff * x_free = 0.
            v[static_cast<size_t>(pivots[r])] = -m.at(static_cast<int>(r), free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<int> independent_subset(const std::vector<RatVec>& vectors) {
    std::vector<int> chosen;
    if (vectors.empty()) return chosen;
    std::vector<RatVec> selected;
    for (size_t k = 0; k < vectors.size(); ++k) {
        selected.push_back(vectors[k]);
        QMat m = QMat::from_columns(selected);
        if (rank(std::move(m)) == static_cast<int>(selected.size())) {
            chosen.push_back(static_cast<int>(k));
        } else {
            selected.pop_back();
        }
    }
    return chosen;
}

} // namespace sadic::detail
