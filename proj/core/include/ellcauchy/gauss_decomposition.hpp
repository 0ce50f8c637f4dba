#ifndef ELLCAUCHY_GAUSS_DECOMPOSITION_HPP
#define ELLCAUCHY_GAUSS_DECOMPOSITION_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ellcauchy/cauchy_problem.hpp"
#include "ellcauchy/dense_matrix.hpp"
#include "ellcauchy/triangular_factor.hpp"

namespace ellcauchy
{

enum class DecompositionMethod { ClosedForm, Peeling };

/// UDL: C = upper * diagonal * lower. LDU: target = lower * diagonal * upper.
enum class FactorOrder { UDL, LDU };

const char *to_string(DecompositionMethod method) noexcept;
const char *to_string(FactorOrder order) noexcept;

struct DecompositionResult {
    TriangularFactor upper;
    TriangularFactor diagonal;
    TriangularFactor lower;
    /// lambda_0 .. lambda_N of the decomposed problem; empty when lambda = infinity.
    std::vector<Complex> lambda_sequence;
    /// Filled by reconstruct_and_report().
    std::optional<double> reconstruction_residual;
    DecompositionMethod method = DecompositionMethod::ClosedForm;
    FactorOrder order = FactorOrder::UDL;
    /// LDU only: ||J C_rev J - C||_F / ||C||_F. Recorded, never asserted.
    std::optional<double> ldu_target_deviation;

    std::size_t size() const noexcept { return diagonal.size(); }
};

/// Closed-form Gauss decomposition C_N(lambda) = U D L:
///   U^{ii} = L^{ii} = 1 / D^{ii} = C_i^{ii}(lambda_i),
///   U^{ij} = C_j^{ij}(lambda_j) for i < j,  L^{ij} = C_i^{ij}(lambda_i) for i > j,
/// where C_k(mu) is the Cauchy-like matrix of the first k points. The nested
/// matrices are never built: the prefix prefactor products are accumulated
/// along rows of U and columns of L, so the work is O(N^2) kernel calls.
///
/// Throws SingularityError; LambdaChain when some sigma(lambda_k) vanishes.
DecompositionResult decompose_closed_form(const CauchyProblem &problem);

/// The same factors by repeated one-step peeling: C_k(lambda_k) splits into a
/// bordered upper factor with last column (C_k^{ik}(lambda_k))_i, the middle
/// block diag(C_{k-1}(lambda_{k-1}), 1 / C_k^{kk}(lambda_k)) and a bordered
/// lower factor with last row (C_k^{kj}(lambda_k))_j. Each entry is evaluated
/// directly from its product formula, so this costs O(N^3) kernel calls.
DecompositionResult decompose_peeling(const CauchyProblem &problem);

/// Lower-diagonal-upper variant: the UDL factors of the reversed problem,
/// conjugated by the reversal permutation J. The factors reproduce
/// ldu_target(problem) = J * C_rev * J.
DecompositionResult decompose_ldu(const CauchyProblem &problem);

/// J * build_cauchy_like(reversal_relabel(problem)) * J.
DenseMatrix ldu_target(const CauchyProblem &problem);

/// det C_N(lambda) = sigma(lambda_0) / (sigma(lambda) prod_k sigma(q_k - r_k)),
/// or 1 / prod_k (q_k - r_k) when lambda = infinity.
Complex determinant_closed_form(const CauchyProblem &problem);

/// prod_k U^{kk} = prod_k C_k^{kk}(lambda_k), the determinant read off the factors.
Complex diagonal_product(const DecompositionResult &result);

/// sigma(lambda_{k-1}) / (sigma(lambda_k) sigma(q_k - r_k)) for k = 1..N
/// (0-based output). 1 / (q_k - r_k) when lambda = infinity.
std::vector<Complex> telescoped_diagonal(const CauchyProblem &problem);

/// Determinant of the (rows, cols) submatrix of build_cauchy_like(problem),
/// from the Frobenius product formula on (q_rows, r_cols, lambda) times the
/// row and column prefactors. Index sets are 0-based, equal size >= 1,
/// without repeats; they are taken in increasing order.
Complex minor_frobenius(const CauchyProblem &problem, std::span<const std::size_t> rows,
                        std::span<const std::size_t> cols);

} // namespace ellcauchy

#endif
