#ifndef ELLCAUCHY_TRIANGULAR_FACTOR_HPP
#define ELLCAUCHY_TRIANGULAR_FACTOR_HPP

#include <cstddef>
#include <vector>

#include "ellcauchy/complex.hpp"
#include "ellcauchy/dense_matrix.hpp"

namespace ellcauchy
{

enum class TriangularShape { Upper, Lower, Diagonal };

/// Square factor holding only its structurally nonzero part in packed storage.
/// Reads outside the structure return exact zero; writes there throw.
class TriangularFactor
{
  public:
    TriangularFactor() = default;
    TriangularFactor(TriangularShape shape, std::size_t n);

    TriangularShape shape() const noexcept { return shape_; }
    std::size_t size() const noexcept { return n_; }

    bool in_structure(std::size_t i, std::size_t j) const noexcept;

    Complex at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, Complex value);

    DenseMatrix to_dense() const;

    /// The conjugate J * F * J, whose shape swaps Upper and Lower.
    TriangularFactor reversed() const;

    std::size_t packed_size() const noexcept { return entries_.size(); }

  private:
    std::size_t offset(std::size_t i, std::size_t j) const noexcept;

    TriangularShape shape_ = TriangularShape::Diagonal;
    std::size_t n_ = 0;
    std::vector<Complex> entries_;
};

} // namespace ellcauchy

#endif
