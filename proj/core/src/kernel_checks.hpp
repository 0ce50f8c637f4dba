#ifndef ELLCAUCHY_SRC_KERNEL_CHECKS_HPP
#define ELLCAUCHY_SRC_KERNEL_CHECKS_HPP

#include <complex>
#include <cstddef>

#include "ellcauchy/cauchy_problem.hpp"
#include "ellcauchy/errors.hpp"

namespace ellcauchy::detail
{

inline void require_away_from_zero(const CauchyProblem &problem, Complex argument, SingularityKind kind,
                                   std::size_t first, std::size_t second)
{
    const double distance = nearest_zero_distance(problem.kernel(), argument);
    if (!(distance > problem.options().singularity_margin)) {
        throw SingularityError(kind, first, second, argument, distance);
    }
}

/// sigma(argument), after checking it is safe to divide by.
inline Complex checked_sigma(const CauchyProblem &problem, Complex argument, SingularityKind kind,
                             std::size_t first, std::size_t second)
{
    require_away_from_zero(problem, argument, kind, first, second);
    return problem.sigma(argument);
}

/// Undressed sigma(argument), after the same check.
inline Complex checked_base_sigma(const CauchyProblem &problem, Complex argument, SingularityKind kind,
                                  std::size_t first, std::size_t second)
{
    require_away_from_zero(problem, argument, kind, first, second);
    return problem.base_sigma(argument);
}

// Ratios of exp(alpha + beta z^2) dressings, with the exponents combined
// before exponentiating. The separate exponents grow like |z|^2 and mostly
// cancel, so exponentiating them one by one loses digits.
class Dressing
{
  public:
    explicit Dressing(const SigmaKernel &kernel)
        : active_(kernel.is_modified()), alpha_(kernel.alpha()), beta_(kernel.beta())
    {
    }

    /// Dressing of sigma(a) / sigma(b).
    Complex quotient(Complex a, Complex b) const { return active_ ? std::exp(beta_ * (a - b) * (a + b)) : 1.0; }

    /// Dressing of sigma(x + lambda) / (sigma(lambda) sigma(x)).
    Complex core(Complex x, Complex lambda) const
    {
        return active_ ? std::exp(2.0 * beta_ * lambda * x - alpha_) : 1.0;
    }

    /// exp(exponent), or 1 when undressed.
    Complex exp(Complex exponent) const { return active_ ? std::exp(exponent) : 1.0; }

    Complex alpha() const noexcept { return alpha_; }
    Complex beta() const noexcept { return beta_; }

  private:
    bool active_;
    Complex alpha_;
    Complex beta_;
};

} // namespace ellcauchy::detail

#endif
