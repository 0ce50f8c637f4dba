#include "ellcauchy/dense_matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "ellcauchy/errors.hpp"

namespace ellcauchy
{

DenseMatrix DenseMatrix::identity(std::size_t n)
{
    DenseMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = 1.0;
    }
    return out;
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<Complex>> &rows)
{
    const std::size_t n_rows = rows.size();
    const std::size_t n_cols = n_rows == 0 ? 0 : rows.front().size();
    DenseMatrix out(n_rows, n_cols);
    for (std::size_t i = 0; i < n_rows; ++i) {
        if (rows[i].size() != n_cols) {
            throw ValidationError("matrix", "ragged rows");
        }
        for (std::size_t j = 0; j < n_cols; ++j) {
            out(i, j) = rows[i][j];
        }
    }
    return out;
}

bool DenseMatrix::all_finite() const
{
    for (const auto &x : entries_) {
        if (!is_finite(x)) {
            return false;
        }
    }
    return true;
}

double DenseMatrix::frobenius_norm() const
{
    // Scaled accumulation; Cauchy-like entries span many orders of magnitude.
    const double scale = max_abs();
    if (scale == 0.0) {
        return 0.0;
    }
    double sum = 0.0;
    for (const auto &x : entries_) {
        sum += std::norm(x / scale);
    }
    return scale * std::sqrt(sum);
}

double DenseMatrix::max_abs() const
{
    double out = 0.0;
    for (const auto &x : entries_) {
        out = std::max(out, std::abs(x));
    }
    return out;
}

DenseMatrix DenseMatrix::reversed() const
{
    DenseMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(i, j) = (*this)(rows_ - 1 - i, cols_ - 1 - j);
        }
    }
    return out;
}

DenseMatrix DenseMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const
{
    DenseMatrix out(rows.size(), cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a) {
        for (std::size_t b = 0; b < cols.size(); ++b) {
            if (rows[a] >= rows_ || cols[b] >= cols_) {
                throw ValidationError("indices", "submatrix index out of range");
            }
            out(a, b) = (*this)(rows[a], cols[b]);
        }
    }
    return out;
}

DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b)
{
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("matrix product: inner dimensions differ");
    }
    DenseMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

DenseMatrix operator-(const DenseMatrix &a, const DenseMatrix &b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw std::invalid_argument("matrix difference: shapes differ");
    }
    DenseMatrix out(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
        out.entries_[k] = a.entries_[k] - b.entries_[k];
    }
    return out;
}

double relative_frobenius_distance(const DenseMatrix &a, const DenseMatrix &b)
{
    const double diff = (a - b).frobenius_norm();
    const double ref = b.frobenius_norm();
    return ref > 0.0 ? diff / ref : diff;
}

} // namespace ellcauchy
