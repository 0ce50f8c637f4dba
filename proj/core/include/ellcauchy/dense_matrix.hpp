#ifndef ELLCAUCHY_DENSE_MATRIX_HPP
#define ELLCAUCHY_DENSE_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "ellcauchy/complex.hpp"

namespace ellcauchy
{

/// Row-major complex matrix. Indices are 0-based.
class DenseMatrix
{
  public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix from_rows(const std::vector<std::vector<Complex>> &rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex &operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Complex &operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<const Complex> entries() const noexcept { return entries_; }

    bool all_finite() const;
    double frobenius_norm() const;
    double max_abs() const;

    /// Anti-diagonal conjugation J * A * J (reverses both index orders).
    DenseMatrix reversed() const;

    DenseMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

    friend DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b);
    friend DenseMatrix operator-(const DenseMatrix &a, const DenseMatrix &b);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

/// ||a - b||_F / ||b||_F (absolute when b vanishes).
double relative_frobenius_distance(const DenseMatrix &a, const DenseMatrix &b);

} // namespace ellcauchy

#endif
