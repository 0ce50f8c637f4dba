#include <gtest/gtest.h>

#include <stdexcept>

#include "ellcauchy/triangular_factor.hpp"

using namespace ellcauchy;

TEST(TriangularFactor, PackedSizes)
{
    EXPECT_EQ(TriangularFactor(TriangularShape::Upper, 5).packed_size(), 15u);
    EXPECT_EQ(TriangularFactor(TriangularShape::Lower, 5).packed_size(), 15u);
    EXPECT_EQ(TriangularFactor(TriangularShape::Diagonal, 5).packed_size(), 5u);
}

TEST(TriangularFactor, StructuralZerosReadAsExactZero)
{
    const std::size_t n = 6;
    for (auto shape : {TriangularShape::Upper, TriangularShape::Lower, TriangularShape::Diagonal}) {
        TriangularFactor f(shape, n);
        // Fill every structural slot with a distinct value.
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (f.in_structure(i, j)) {
                    f.set(i, j, Complex(1.0 + i, 1.0 + j));
                } else {
                    EXPECT_THROW(f.set(i, j, 1.0), std::out_of_range);
                }
            }
        }
        const DenseMatrix dense = f.to_dense();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const Complex expected = f.in_structure(i, j) ? Complex(1.0 + i, 1.0 + j) : Complex{};
                EXPECT_EQ(f.at(i, j), expected);
                EXPECT_EQ(dense(i, j), expected);
            }
        }
    }
}

TEST(TriangularFactor, ReversalSwapsShape)
{
    TriangularFactor upper(TriangularShape::Upper, 3);
    upper.set(0, 2, 7.0);
    upper.set(1, 1, 2.0);
    const TriangularFactor lower = upper.reversed();
    EXPECT_EQ(lower.shape(), TriangularShape::Lower);
    EXPECT_EQ(lower.at(2, 0), Complex(7.0));
    EXPECT_EQ(lower.at(1, 1), Complex(2.0));
    EXPECT_EQ(lower.reversed().to_dense().entries().size(), 9u);
    EXPECT_EQ(lower.reversed().at(0, 2), Complex(7.0));
}

TEST(TriangularFactor, OutOfRangeRead)
{
    const TriangularFactor f(TriangularShape::Upper, 2);
    EXPECT_THROW(f.at(2, 0), std::out_of_range);
}
