#ifndef ELLCAUCHY_CAUCHY_PROBLEM_HPP
#define ELLCAUCHY_CAUCHY_PROBLEM_HPP

#include <cstddef>
#include <variant>
#include <vector>

#include "ellcauchy/complex.hpp"
#include "ellcauchy/special_functions.hpp"

namespace ellcauchy
{

/// Symbolic lambda -> infinity; only meaningful with the plain rational kernel.
struct AtInfinity {
    friend bool operator==(AtInfinity, AtInfinity) noexcept { return true; }
};

inline constexpr AtInfinity at_infinity{};

using SpectralParameter = std::variant<Complex, AtInfinity>;

inline bool is_at_infinity(const SpectralParameter &lambda) noexcept
{
    return std::holds_alternative<AtInfinity>(lambda);
}

/// Input of the Cauchy-like construction: points q_1..q_N, r_1..r_N, the
/// spectral parameter lambda and the kernel. Vectors are stored 0-based, so
/// q[i] is q_{i+1}.
///
/// The constructor checks the shape invariants only (N >= 1, equal lengths,
/// finite values, lambda = infinity only for the rational kernel). Kernel-zero
/// conditions depend on what is being computed and are checked by the
/// builders and decompositions.
class CauchyProblem
{
  public:
    CauchyProblem(std::vector<Complex> q, std::vector<Complex> r, SpectralParameter lambda, SigmaKernel kernel,
                  EvalOptions options = {});

    std::size_t size() const noexcept { return q_.size(); }
    const std::vector<Complex> &q() const noexcept { return q_; }
    const std::vector<Complex> &r() const noexcept { return r_; }
    const SpectralParameter &lambda() const noexcept { return lambda_; }
    bool at_infinity() const noexcept { return is_at_infinity(lambda_); }
    /// Finite lambda; throws ValidationError in the infinite mode.
    Complex lambda_value() const;
    const SigmaKernel &kernel() const noexcept { return kernel_; }
    const EvalOptions &options() const noexcept { return options_; }

    Complex sigma(Complex z) const { return sigma_eval(kernel_, z, options_); }
    Complex base_sigma(Complex z) const { return sigma_base_eval(kernel_, z, options_); }

  private:
    std::vector<Complex> q_;
    std::vector<Complex> r_;
    SpectralParameter lambda_;
    SigmaKernel kernel_;
    EvalOptions options_;
};

/// (lambda_0, ..., lambda_N) with lambda_N = lambda and
/// lambda_{k-1} = lambda_k + q_k - r_k. Index k of the result is lambda_k.
/// Requires a finite lambda.
std::vector<Complex> lambda_sequence(const CauchyProblem &problem);

/// The same sequence from lambda_{k-1} = lambda + sum_{j=k}^{N} (q_j - r_j).
std::vector<Complex> lambda_sequence_closed_sum(const CauchyProblem &problem);

} // namespace ellcauchy

#endif
