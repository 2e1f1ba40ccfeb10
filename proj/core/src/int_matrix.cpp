#include "sadic/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace sadic {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
    entries_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Int(0));
}

size_t IntMatrix::index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::out_of_range("matrix index out of range");
    return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::multiply(const IntMatrix& other) const {
    if (cols_ != other.rows_)
        throw std::invalid_argument("matrix product dimension mismatch");
    IntMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < other.cols_; ++j) {
                out.at(i, j) += a * other.at(k, j);
            }
        }
    }
    return out;
}

IntMatrix IntMatrix::pow(int exponent) const {
    if (!is_square()) throw std::invalid_argument("matrix power requires a square matrix");
    if (exponent < 0) throw std::invalid_argument("matrix power requires a nonnegative exponent");
    IntMatrix result = identity(rows_);
    IntMatrix base = *this;
    int e = exponent;
    while (e > 0) {
        if (e & 1) result = result.multiply(base);
        e >>= 1;
        if (e > 0) base = base.multiply(base);
    }
    return result;
}

Int IntMatrix::column_sum(int j) const {
    Int s = 0;
    for (int i = 0; i < rows_; ++i) s += at(i, j);
    return s;
}

Int IntMatrix::min_column_sum() const {
    Int best = column_sum(0);
    for (int j = 1; j < cols_; ++j) {
        Int s = column_sum(j);
        if (s < best) best = s;
    }
    return best;
}

Int IntMatrix::total_sum() const {
    Int s = 0;
    for (const auto& e : entries_) s += e;
    return s;
}

bool IntMatrix::all_positive() const {
    for (const auto& e : entries_)
        if (e <= 0) return false;
    return true;
}

bool IntMatrix::has_zero_column() const {
    for (int j = 0; j < cols_; ++j)
        if (column_sum(j) == 0) return true;
    return false;
}

Int IntMatrix::determinant() const {
    if (!is_square()) throw std::invalid_argument("determinant requires a square matrix");
    const int n = rows_;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination: every division below is exact.
    std::vector<Int> a(entries_);
    auto e = [&](int i, int j) -> Int& { return a[static_cast<size_t>(i) * n + j]; };
    Int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (e(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i) {
                if (e(i, k) != 0) { pivot = i; break; }
            }
            if (pivot < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(e(k, j), e(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int num = e(i, j) * e(k, k) - e(i, k) * e(k, j);
                mpz_divexact(e(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            e(i, k) = 0;
        }
        prev = e(k, k);
    }
    return sign * e(n - 1, n - 1);
}

RatVec IntMatrix::apply(const RatVec& x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw std::invalid_argument("matrix-vector dimension mismatch");
    RatVec y(static_cast<size_t>(rows_), Rat(0));
    for (int i = 0; i < rows_; ++i) {
        Rat s = 0;
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j) != 0) s += Rat(at(i, j)) * x[static_cast<size_t>(j)];
        }
        y[static_cast<size_t>(i)] = s;
    }
    return y;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

std::string IntMatrix::to_string() const {
    std::ostringstream out;
    out << "[";
    for (int i = 0; i < rows_; ++i) {
        out << (i == 0 ? "[" : " [");
        for (int j = 0; j < cols_; ++j) {
            if (j > 0) out << ",";
            out << at(i, j).get_str();
        }
        out << "]";
        if (i + 1 < rows_) out << "\n";
    }
    out << "]";
    return out.str();
}

} // namespace sadic
