#include "ellcauchy/matrix_builder.hpp"

#include <algorithm>

#include "kernel_checks.hpp"

namespace ellcauchy
{

namespace
{

using detail::checked_base_sigma;
using detail::Dressing;

// Undressed sigma(q_i - r_j) for all pairs, each checked against the kernel zeros.
DenseMatrix qr_sigma_table(const CauchyProblem &problem)
{
    const std::size_t n = problem.size();
    DenseMatrix table(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            table(i, j) =
                checked_base_sigma(problem, problem.q()[i] - problem.r()[j], SingularityKind::QrDifference, i, j);
        }
    }
    return table;
}

PrefactorDiagonals prefactors_from_table(const CauchyProblem &problem, const DenseMatrix &qr)
{
    const std::size_t n = problem.size();
    const auto &q = problem.q();
    const auto &r = problem.r();
    const Dressing dressing(problem.kernel());
    PrefactorDiagonals out{std::vector<Complex>(n, 1.0), std::vector<Complex>(n, 1.0)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = i + 1; k < n; ++k) {
            const Complex den = q[i] - q[k];
            out.left[i] *= qr(i, k) / checked_base_sigma(problem, den, SingularityKind::LeftPrefactor, i, k) *
                           dressing.quotient(q[i] - r[k], den);
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = j + 1; l < n; ++l) {
            const Complex den = r[l] - r[j];
            out.right[j] *= qr(l, j) / checked_base_sigma(problem, den, SingularityKind::RightPrefactor, j, l) *
                            dressing.quotient(q[l] - r[j], den);
        }
    }
    return out;
}

// Undressed sigma(lambda), or 0 as a marker for the symbolic infinite mode.
Complex checked_sigma_lambda(const CauchyProblem &problem)
{
    if (problem.at_infinity()) {
        return {};
    }
    return checked_base_sigma(problem, problem.lambda_value(), SingularityKind::LambdaChain, problem.size(), 0);
}

DenseMatrix kernel_matrix(const CauchyProblem &problem, const DenseMatrix &qr, Complex sigma_lambda)
{
    const std::size_t n = problem.size();
    const Dressing dressing(problem.kernel());
    DenseMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Complex difference = problem.q()[i] - problem.r()[j];
            if (problem.at_infinity()) {
                out(i, j) = 1.0 / difference;
            } else {
                const Complex lambda = problem.lambda_value();
                out(i, j) = problem.base_sigma(difference + lambda) / (sigma_lambda * qr(i, j)) *
                            dressing.core(difference, lambda);
            }
        }
    }
    return out;
}

} // namespace

PrefactorDiagonals prefactor_diagonals(const CauchyProblem &problem)
{
    return prefactors_from_table(problem, qr_sigma_table(problem));
}

void check_cauchy_like_denominators(const CauchyProblem &problem)
{
    checked_sigma_lambda(problem);
    const DenseMatrix qr = qr_sigma_table(problem);
    prefactors_from_table(problem, qr);
}

DenseMatrix build_cauchy_like(const CauchyProblem &problem)
{
    const Complex sigma_lambda = checked_sigma_lambda(problem);
    const DenseMatrix qr = qr_sigma_table(problem);
    const PrefactorDiagonals pre = prefactors_from_table(problem, qr);
    DenseMatrix out = kernel_matrix(problem, qr, sigma_lambda);
    const std::size_t n = problem.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) *= pre.left[i] * pre.right[j];
        }
    }
    return out;
}

DenseMatrix build_frobenius_kernel(const CauchyProblem &problem)
{
    const Complex sigma_lambda = checked_sigma_lambda(problem);
    return kernel_matrix(problem, qr_sigma_table(problem), sigma_lambda);
}

Complex frobenius_core(const CauchyProblem &problem, Complex difference, const SpectralParameter &mu)
{
    if (is_at_infinity(mu)) {
        return 1.0 / difference;
    }
    const Complex value = std::get<Complex>(mu);
    return problem.base_sigma(difference + value) / (problem.base_sigma(value) * problem.base_sigma(difference)) *
           Dressing(problem.kernel()).core(difference, value);
}

Complex cauchy_like_entry(const CauchyProblem &problem, std::size_t size, std::size_t i, std::size_t j,
                          const SpectralParameter &mu)
{
    const auto &q = problem.q();
    const auto &r = problem.r();
    const Dressing dressing(problem.kernel());
    const auto quotient = [&](Complex a, Complex b) {
        return problem.base_sigma(a) / problem.base_sigma(b) * dressing.quotient(a, b);
    };
    Complex value = frobenius_core(problem, q[i] - r[j], mu);
    for (std::size_t k = i + 1; k < size; ++k) {
        value *= quotient(q[i] - r[k], q[i] - q[k]);
    }
    for (std::size_t l = j + 1; l < size; ++l) {
        value *= quotient(q[l] - r[j], r[l] - r[j]);
    }
    return value;
}

CauchyProblem reversal_relabel(const CauchyProblem &problem)
{
    std::vector<Complex> q(problem.q().rbegin(), problem.q().rend());
    std::vector<Complex> r(problem.r().rbegin(), problem.r().rend());
    return CauchyProblem(std::move(q), std::move(r), problem.lambda(), problem.kernel(), problem.options());
}

} // namespace ellcauchy
