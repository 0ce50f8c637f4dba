#ifndef ELLCAUCHY_COMPLEX_HPP
#define ELLCAUCHY_COMPLEX_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

namespace ellcauchy
{

using Complex = std::complex<double>;

inline bool is_finite(const Complex &z)
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Scalar comparison policy: relative to max(|expected|, 1e-300).
inline double relative_error(const Complex &actual, const Complex &expected)
{
    return std::abs(actual - expected) / std::max(std::abs(expected), 1e-300);
}

} // namespace ellcauchy

#endif
