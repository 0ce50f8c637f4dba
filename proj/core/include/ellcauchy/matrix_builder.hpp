#ifndef ELLCAUCHY_MATRIX_BUILDER_HPP
#define ELLCAUCHY_MATRIX_BUILDER_HPP

#include <cstddef>
#include <vector>

#include "ellcauchy/cauchy_problem.hpp"
#include "ellcauchy/dense_matrix.hpp"

namespace ellcauchy
{

/// Row and column scalings of the Cauchy-like matrix:
///   left[i]  = prod_{k>i} sigma(q_i - r_k) / sigma(q_i - q_k)
///   right[j] = prod_{l>j} sigma(q_l - r_j) / sigma(r_l - r_j)
/// (0-based, empty products are 1).
struct PrefactorDiagonals {
    std::vector<Complex> left;
    std::vector<Complex> right;
};

PrefactorDiagonals prefactor_diagonals(const CauchyProblem &problem);

/// The Cauchy-like matrix C_N(lambda): left[i] * K(q_i - r_j; lambda) * right[j]
/// where K(x; lambda) = sigma(x + lambda) / (sigma(lambda) sigma(x)), or
/// 1 / x in the rational lambda = infinity mode.
///
/// Throws SingularityError naming the offending pair when any of
/// sigma(q_i - r_j), sigma(q_i - q_k), sigma(r_l - r_j) or sigma(lambda)
/// is within the singularity margin of a kernel zero.
DenseMatrix build_cauchy_like(const CauchyProblem &problem);

/// The bare Frobenius kernel matrix K(q_i - r_j; lambda) without prefactors.
/// Coincident q's (or r's) are allowed here.
DenseMatrix build_frobenius_kernel(const CauchyProblem &problem);

/// Entry (i, j) (0-based, i, j < size) of the Cauchy-like matrix built from
/// the first `size` points only, at spectral parameter mu. Products are
/// evaluated directly, O(size) kernel calls; no singularity checks.
Complex cauchy_like_entry(const CauchyProblem &problem, std::size_t size, std::size_t i, std::size_t j,
                          const SpectralParameter &mu);

/// Kernel core K(x; mu) used by every entry formula.
Complex frobenius_core(const CauchyProblem &problem, Complex difference, const SpectralParameter &mu);

/// q and r reversed, lambda and kernel unchanged.
CauchyProblem reversal_relabel(const CauchyProblem &problem);

/// Throw if the full set of Cauchy-like denominators is not safely non-zero.
void check_cauchy_like_denominators(const CauchyProblem &problem);

} // namespace ellcauchy

#endif
