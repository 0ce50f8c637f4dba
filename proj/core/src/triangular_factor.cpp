#include "ellcauchy/triangular_factor.hpp"

#include <stdexcept>
#include <string>

namespace ellcauchy
{

namespace
{

std::size_t packed_length(TriangularShape shape, std::size_t n)
{
    return shape == TriangularShape::Diagonal ? n : n * (n + 1) / 2;
}

} // namespace

TriangularFactor::TriangularFactor(TriangularShape shape, std::size_t n)
    : shape_(shape), n_(n), entries_(packed_length(shape, n))
{
}

bool TriangularFactor::in_structure(std::size_t i, std::size_t j) const noexcept
{
    if (i >= n_ || j >= n_) {
        return false;
    }
    switch (shape_) {
    case TriangularShape::Upper:
        return i <= j;
    case TriangularShape::Lower:
        return i >= j;
    case TriangularShape::Diagonal:
        return i == j;
    }
    return false;
}

std::size_t TriangularFactor::offset(std::size_t i, std::size_t j) const noexcept
{
    switch (shape_) {
    case TriangularShape::Upper:
        // Row i holds columns i..n-1 and starts after rows 0..i-1.
        return i * n_ - i * (i - 1) / 2 + (j - i);
    case TriangularShape::Lower:
        return i * (i + 1) / 2 + j;
    case TriangularShape::Diagonal:
        return i;
    }
    return 0;
}

Complex TriangularFactor::at(std::size_t i, std::size_t j) const
{
    if (i >= n_ || j >= n_) {
        throw std::out_of_range("triangular factor index out of range");
    }
    return in_structure(i, j) ? entries_[offset(i, j)] : Complex{};
}

void TriangularFactor::set(std::size_t i, std::size_t j, Complex value)
{
    if (!in_structure(i, j)) {
        throw std::out_of_range("write outside triangular structure at (" + std::to_string(i) + ", " +
                                std::to_string(j) + ")");
    }
    entries_[offset(i, j)] = value;
}

DenseMatrix TriangularFactor::to_dense() const
{
    DenseMatrix out(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (in_structure(i, j)) {
                out(i, j) = entries_[offset(i, j)];
            }
        }
    }
    return out;
}

TriangularFactor TriangularFactor::reversed() const
{
    TriangularShape flipped = shape_;
    if (shape_ == TriangularShape::Upper) {
        flipped = TriangularShape::Lower;
    } else if (shape_ == TriangularShape::Lower) {
        flipped = TriangularShape::Upper;
    }
    TriangularFactor out(flipped, n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (in_structure(i, j)) {
                out.set(n_ - 1 - i, n_ - 1 - j, entries_[offset(i, j)]);
            }
        }
    }
    return out;
}

} // namespace ellcauchy
