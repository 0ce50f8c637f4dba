#include "ellcauchy/gauss_decomposition.hpp"

#include <algorithm>
#include <string>

#include "ellcauchy/errors.hpp"
#include "ellcauchy/matrix_builder.hpp"
#include "kernel_checks.hpp"

namespace ellcauchy
{

namespace
{

using detail::checked_base_sigma;
using detail::Dressing;

// The lambda chain with its undressed sigma values, both indexed by k = 0..N. In the
// infinite mode both are empty and every core factor degenerates to 1 / x.
struct LambdaChain {
    std::vector<Complex> values;
    std::vector<Complex> sigmas;

    SpectralParameter at(std::size_t k) const
    {
        if (values.empty()) {
            return at_infinity;
        }
        return values[k];
    }
};

LambdaChain checked_lambda_chain(const CauchyProblem &problem)
{
    LambdaChain chain;
    if (problem.at_infinity()) {
        return chain;
    }
    chain.values = lambda_sequence(problem);
    chain.sigmas.reserve(chain.values.size());
    for (std::size_t k = 0; k < chain.values.size(); ++k) {
        chain.sigmas.push_back(checked_base_sigma(problem, chain.values[k], SingularityKind::LambdaChain, k, 0));
    }
    return chain;
}

DecompositionResult empty_result(std::size_t n, DecompositionMethod method)
{
    DecompositionResult out;
    out.upper = TriangularFactor(TriangularShape::Upper, n);
    out.diagonal = TriangularFactor(TriangularShape::Diagonal, n);
    out.lower = TriangularFactor(TriangularShape::Lower, n);
    out.method = method;
    return out;
}

void set_diagonal(DecompositionResult &out, std::size_t i, Complex value)
{
    out.upper.set(i, i, value);
    out.lower.set(i, i, value);
    out.diagonal.set(i, i, 1.0 / value);
}

std::vector<std::size_t> sorted_index_set(std::span<const std::size_t> indices, std::size_t n, const char *field)
{
    std::vector<std::size_t> out(indices.begin(), indices.end());
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
        throw ValidationError(field, "repeated index");
    }
    if (!out.empty() && out.back() >= n) {
        throw ValidationError(field, "index " + std::to_string(out.back() + 1) + " out of range 1.." +
                                         std::to_string(n));
    }
    return out;
}

} // namespace

const char *to_string(DecompositionMethod method) noexcept
{
    return method == DecompositionMethod::ClosedForm ? "closed" : "peeling";
}

const char *to_string(FactorOrder order) noexcept { return order == FactorOrder::UDL ? "UDL" : "LDU"; }

DecompositionResult decompose_closed_form(const CauchyProblem &problem)
{
    const std::size_t n = problem.size();
    const auto &q = problem.q();
    const auto &r = problem.r();
    const LambdaChain chain = checked_lambda_chain(problem);
    const bool infinite = problem.at_infinity();
    const Dressing dressing(problem.kernel());

    // Undressed sigma(q_i - r_j) for the current row i.
    std::vector<Complex> qr(n);
    // Core factor of the size-k matrix at lambda_k (1-based k) for the 0-based pair (i, j).
    const auto core = [&](std::size_t i, std::size_t j, std::size_t k) -> Complex {
        if (infinite) {
            return 1.0 / (q[i] - r[j]);
        }
        const Complex x = q[i] - r[j];
        return problem.base_sigma(x + chain.values[k]) / (chain.sigmas[k] * qr[j]) * dressing.core(x, chain.values[k]);
    };

    DecompositionResult out = empty_result(n, DecompositionMethod::ClosedForm);
    out.lambda_sequence = chain.values;

    // Both factors are filled row by row, their storage order, so nothing of size N^2
    // is kept besides the output.
    //   U^{ij} = [prod_{k=i+1}^{j} sigma(q_i - r_k) / sigma(q_i - q_k)] * core at lambda_j
    //   L^{ij} = core at lambda_i * [prod_{l=j+1}^{i} sigma(q_l - r_j) / sigma(r_l - r_j)]
    // The L products run down columns, so each column keeps its own running product.
    std::vector<Complex> right(n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            qr[j] = checked_base_sigma(problem, q[i] - r[j], SingularityKind::QrDifference, i, j);
        }
        for (std::size_t j = 0; j < i; ++j) {
            const Complex den = r[i] - r[j];
            right[j] *= qr[j] / checked_base_sigma(problem, den, SingularityKind::RightPrefactor, j, i) *
                        dressing.quotient(q[i] - r[j], den);
            out.lower.set(i, j, core(i, j, i + 1) * right[j]);
        }
        set_diagonal(out, i, core(i, i, i + 1));
        Complex left = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex den = q[i] - q[j];
            left *= qr[j] / checked_base_sigma(problem, den, SingularityKind::LeftPrefactor, i, j) *
                    dressing.quotient(q[i] - r[j], den);
            out.upper.set(i, j, left * core(i, j, j + 1));
        }
    }
    return out;
}

DecompositionResult decompose_peeling(const CauchyProblem &problem)
{
    const std::size_t n = problem.size();
    const LambdaChain chain = checked_lambda_chain(problem);
    check_cauchy_like_denominators(problem);

    DecompositionResult out = empty_result(n, DecompositionMethod::Peeling);
    out.lambda_sequence = chain.values;

    // Peel C_k(lambda_k) for k = N, N-1, ..., 1. The accumulated product of
    // bordered unit factors only ever replaces column k of U and row k of L,
    // since all columns (rows) left of k are still unit vectors.
    for (std::size_t k = n; k >= 1; --k) {
        const SpectralParameter mu = chain.at(k);
        const std::size_t last = k - 1;
        set_diagonal(out, last, cauchy_like_entry(problem, k, last, last, mu));
        for (std::size_t i = 0; i < last; ++i) {
            out.upper.set(i, last, cauchy_like_entry(problem, k, i, last, mu));
            out.lower.set(last, i, cauchy_like_entry(problem, k, last, i, mu));
        }
    }
    return out;
}

DenseMatrix ldu_target(const CauchyProblem &problem)
{
    return build_cauchy_like(reversal_relabel(problem)).reversed();
}

DecompositionResult decompose_ldu(const CauchyProblem &problem)
{
    const DecompositionResult relabeled = decompose_closed_form(reversal_relabel(problem));
    DecompositionResult out;
    out.lower = relabeled.upper.reversed();
    out.diagonal = relabeled.diagonal.reversed();
    out.upper = relabeled.lower.reversed();
    out.lambda_sequence = relabeled.lambda_sequence;
    out.method = DecompositionMethod::ClosedForm;
    out.order = FactorOrder::LDU;
    out.ldu_target_deviation = relative_frobenius_distance(ldu_target(problem), build_cauchy_like(problem));
    return out;
}

std::vector<Complex> telescoped_diagonal(const CauchyProblem &problem)
{
    const std::size_t n = problem.size();
    const LambdaChain chain = checked_lambda_chain(problem);
    const Dressing dressing(problem.kernel());
    std::vector<Complex> out(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const Complex difference = problem.q()[k - 1] - problem.r()[k - 1];
        const Complex sigma_difference =
            checked_base_sigma(problem, difference, SingularityKind::QrDifference, k - 1, k - 1);
        out[k - 1] = problem.at_infinity() ? 1.0 / difference
                                           : chain.sigmas[k - 1] / (chain.sigmas[k] * sigma_difference) *
                                                 dressing.core(difference, chain.values[k]);
    }
    return out;
}

Complex determinant_closed_form(const CauchyProblem &problem)
{
    check_cauchy_like_denominators(problem);
    const LambdaChain chain = checked_lambda_chain(problem);
    const std::size_t n = problem.size();
    if (problem.at_infinity()) {
        Complex denominator = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
            denominator *= problem.sigma(problem.q()[k] - problem.r()[k]);
        }
        return 1.0 / denominator;
    }
    // Dressing exponent beta (lambda_0^2 - lambda^2 - sum d_k^2) - N alpha, with lambda_0 = lambda + S.
    const Dressing dressing(problem.kernel());
    Complex denominator = 1.0;
    Complex sum{};
    Complex sum_squares{};
    for (std::size_t k = 0; k < n; ++k) {
        const Complex difference = problem.q()[k] - problem.r()[k];
        denominator *= problem.base_sigma(difference);
        sum += difference;
        sum_squares += difference * difference;
    }
    const Complex exponent = dressing.beta() * (2.0 * problem.lambda_value() * sum + sum * sum - sum_squares) -
                             static_cast<double>(n) * dressing.alpha();
    return chain.sigmas.front() / (chain.sigmas.back() * denominator) * dressing.exp(exponent);
}

Complex diagonal_product(const DecompositionResult &result)
{
    Complex out = 1.0;
    for (std::size_t k = 0; k < result.size(); ++k) {
        out *= result.order == FactorOrder::UDL ? result.upper.at(k, k) : result.lower.at(k, k);
    }
    return out;
}

Complex minor_frobenius(const CauchyProblem &problem, std::span<const std::size_t> rows,
                        std::span<const std::size_t> cols)
{
    if (rows.empty()) {
        throw ValidationError("rows", "index set must not be empty");
    }
    if (rows.size() != cols.size()) {
        throw ValidationError("cols", "row and column index sets differ in size");
    }
    const std::size_t n = problem.size();
    const std::vector<std::size_t> row_set = sorted_index_set(rows, n, "rows");
    const std::vector<std::size_t> col_set = sorted_index_set(cols, n, "cols");
    const PrefactorDiagonals pre = prefactor_diagonals(problem);
    const auto &q = problem.q();
    const auto &r = problem.r();
    const std::size_t m = row_set.size();

    // Bare Frobenius determinant on (q_I, r_J, lambda):
    //   sigma(lambda + sum (q - r)) / sigma(lambda)
    //   * prod_{a<b} sigma(q_a - q_b) sigma(r_b - r_a) / prod_{a,b} sigma(q_a - r_b)
    // Undressed factors first. The dressing exponents of the whole product
    // collapse to 2 beta lambda S - m alpha (-beta S^2 - m alpha without lambda).
    Complex value = 1.0;
    Complex shift{};
    for (std::size_t a = 0; a < m; ++a) {
        shift += q[row_set[a]] - r[col_set[a]];
        for (std::size_t b = a + 1; b < m; ++b) {
            value *= problem.base_sigma(q[row_set[a]] - q[row_set[b]]) *
                     problem.base_sigma(r[col_set[b]] - r[col_set[a]]);
        }
        for (std::size_t b = 0; b < m; ++b) {
            value /= problem.base_sigma(q[row_set[a]] - r[col_set[b]]);
        }
    }
    const Dressing dressing(problem.kernel());
    Complex exponent = -static_cast<double>(m) * dressing.alpha();
    if (problem.at_infinity()) {
        exponent -= dressing.beta() * shift * shift;
    } else {
        const Complex lambda = problem.lambda_value();
        value *= problem.base_sigma(lambda + shift) /
                 checked_base_sigma(problem, lambda, SingularityKind::LambdaChain, n, 0);
        exponent += 2.0 * dressing.beta() * lambda * shift;
    }
    value *= dressing.exp(exponent);
    for (std::size_t a = 0; a < m; ++a) {
        value *= pre.left[row_set[a]] * pre.right[col_set[a]];
    }
    return value;
}

} // namespace ellcauchy
