#ifndef ELLCAUCHY_ORACLE_HPP
#define ELLCAUCHY_ORACLE_HPP

#include <optional>

#include "ellcauchy/dense_matrix.hpp"
#include "ellcauchy/gauss_decomposition.hpp"
#include "ellcauchy/special_functions.hpp"

// Brute-force ground truth for the closed-form results. Nothing in here
// uses the Cauchy-like structure of its input.

namespace ellcauchy::oracle
{

struct ResidualReport {
    double frobenius_relative = 0.0;
    double max_entry_relative = 0.0;
    std::optional<double> determinant_relative;
    std::optional<double> condition_estimate;
};

struct LuFactors {
    DenseMatrix lower;  // unit lower triangular
    DenseMatrix upper;
};

/// Unpivoted Doolittle elimination A = L U. Throws BreakdownError carrying
/// the pivot index when a leading pivot is lost in the roundoff of its own
/// elimination updates.
LuFactors lu_doolittle(const DenseMatrix &matrix);

/// Determinant as the product of the unpivoted pivots.
Complex det_unpivoted(const DenseMatrix &matrix);

/// Determinant by Gaussian elimination with partial pivoting (sign-tracked).
Complex det_partial_pivot(const DenseMatrix &matrix);

/// Unpivoted determinant, replaced by the partially pivoted one when the
/// unpivoted elimination shows element growth above 1e8.
Complex det_numeric(const DenseMatrix &matrix);

/// 2-norm condition estimate by power iteration through the LU factors.
double condition_estimate(const DenseMatrix &matrix, int iterations = 30);

/// Dense product of the factors in their stated order, skipping structural zeros.
DenseMatrix multiply_factors(const DecompositionResult &result);

/// Residuals of the factors against `matrix`; stores the relative Frobenius
/// residual in result.reconstruction_residual.
ResidualReport reconstruct_and_report(DecompositionResult &result, const DenseMatrix &matrix);

/// z * prod' (1 - z/w) exp(z/w + z^2 / (2 w^2)) over w = 2 m omega1 + 2 n omega3,
/// |m|, |n| <= cutoff, w != 0. Converges like cutoff^-2. Requires cutoff >= 10.
Complex sigma_lattice_product(const LatticeParams &lattice, Complex z, int cutoff);

} // namespace ellcauchy::oracle

#endif
