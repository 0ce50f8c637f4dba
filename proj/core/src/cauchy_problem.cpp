#include "ellcauchy/cauchy_problem.hpp"

#include <string>

#include "ellcauchy/errors.hpp"

namespace ellcauchy
{

namespace
{

void require_finite(const std::vector<Complex> &values, const char *field)
{
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!is_finite(values[i])) {
            throw ValidationError(field, "entry " + std::to_string(i + 1) + " is not finite");
        }
    }
}

} // namespace

CauchyProblem::CauchyProblem(std::vector<Complex> q, std::vector<Complex> r, SpectralParameter lambda,
                             SigmaKernel kernel, EvalOptions options)
    : q_(std::move(q)), r_(std::move(r)), lambda_(lambda), kernel_(std::move(kernel)), options_(options)
{
    options_.validate();
    if (q_.empty()) {
        throw ValidationError("q", "at least one point is required");
    }
    if (r_.size() != q_.size()) {
        throw ValidationError("r", "must have the same length as q (" + std::to_string(q_.size()) + ")");
    }
    require_finite(q_, "q");
    require_finite(r_, "r");
    if (const auto *value = std::get_if<Complex>(&lambda_)) {
        if (!is_finite(*value)) {
            throw ValidationError("lambda", "must be finite or the infinity sentinel");
        }
    } else if (kernel_.variant() != KernelVariant::Rational) {
        throw ValidationError("lambda", "infinity is only valid with the rational kernel");
    }
}

Complex CauchyProblem::lambda_value() const
{
    if (const auto *value = std::get_if<Complex>(&lambda_)) {
        return *value;
    }
    throw ValidationError("lambda", "a finite value is required");
}

std::vector<Complex> lambda_sequence(const CauchyProblem &problem)
{
    const std::size_t n = problem.size();
    std::vector<Complex> out(n + 1);
    out[n] = problem.lambda_value();
    // Extended accumulator: each lambda_k is rounded once, not k times.
    std::complex<long double> acc(out[n].real(), out[n].imag());
    for (std::size_t k = n; k >= 1; --k) {
        const Complex q = problem.q()[k - 1];
        const Complex r = problem.r()[k - 1];
        acc += std::complex<long double>(q.real(), q.imag()) - std::complex<long double>(r.real(), r.imag());
        out[k - 1] = Complex(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
    }
    return out;
}

std::vector<Complex> lambda_sequence_closed_sum(const CauchyProblem &problem)
{
    const std::size_t n = problem.size();
    const Complex lambda = problem.lambda_value();
    std::vector<Complex> out(n + 1);
    out[n] = lambda;
    for (std::size_t k = 1; k <= n; ++k) {
        Complex sum{};
        for (std::size_t j = k; j <= n; ++j) {
            sum += problem.q()[j - 1] - problem.r()[j - 1];
        }
        out[k - 1] = lambda + sum;
    }
    return out;
}

} // namespace ellcauchy
