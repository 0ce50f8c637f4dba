#ifndef ELLCAUCHY_TESTS_SUPPORT_INSTANCES_HPP
#define ELLCAUCHY_TESTS_SUPPORT_INSTANCES_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ellcauchy/cauchy_problem.hpp"

namespace ellcauchy::testing
{

/// A kernel together with the region random points are drawn from:
/// z = u * basis_re + v * basis_im with u, v uniform in [-1, 1].
struct KernelFamily {
    std::string name;
    SigmaKernel kernel;
    Complex basis_re;
    Complex basis_im;
};

/// Elliptic kernel with |nome| = modulus, tau = 0.25 + i t and omega1
/// chosen so the period cell has unit area.
SigmaKernel elliptic_by_nome(double modulus);

/// The grid used by the acceptance suite: rational, trig, hyperbolic,
/// elliptic at |nome| 0.2 / 0.5 / 0.7 and two modified kernels.
std::vector<KernelFamily> standard_families();

KernelFamily family_for(const SigmaKernel &kernel);

class InstanceGenerator
{
  public:
    explicit InstanceGenerator(std::uint64_t seed, double min_separation = 0.05)
        : rng_(seed), min_separation_(min_separation)
    {
    }

    Complex point(const KernelFamily &family);
    Complex uniform_complex(double radius);
    double uniform(double lo, double hi);

    /// Random problem of size n whose every Cauchy-like denominator and every
    /// lambda_k stays at least min_separation away from the kernel zeros.
    CauchyProblem problem(const KernelFamily &family, std::size_t n, bool lambda_at_infinity = false);

    std::mt19937_64 &engine() { return rng_; }

  private:
    bool far(const SigmaKernel &kernel, Complex z) const;

    std::mt19937_64 rng_;
    double min_separation_;
};

} // namespace ellcauchy::testing

#endif
