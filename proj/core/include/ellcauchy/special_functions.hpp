#ifndef ELLCAUCHY_SPECIAL_FUNCTIONS_HPP
#define ELLCAUCHY_SPECIAL_FUNCTIONS_HPP

#include <optional>
#include <string>
#include <variant>

#include "ellcauchy/complex.hpp"

namespace ellcauchy
{

/// Tuning knobs shared by every kernel evaluation.
struct EvalOptions {
    double series_tolerance = 1e-16;
    int max_terms = 64;
    double singularity_margin = 1e-9;

    /// Throws ValidationError when a field is out of range.
    void validate() const;
};

/// Period lattice of the elliptic kernel, parameterized by the real-axis
/// half-period omega1 and the period ratio tau = omega3 / omega1, Im(tau) > 0.
///
/// The nome exp(i*pi*tau) and the quasi-period constants eta1, eta3 are
/// computed once at construction. |nome| is capped at 0.95: beyond that the
/// default term budget of the theta series no longer reaches full precision.
class LatticeParams
{
  public:
    static constexpr double max_nome_modulus = 0.95;

    LatticeParams(Complex omega1, Complex tau);

    Complex omega1() const noexcept { return omega1_; }
    Complex omega3() const noexcept { return omega1_ * tau_; }
    Complex tau() const noexcept { return tau_; }
    Complex nome() const noexcept { return nome_; }
    Complex eta1() const noexcept { return eta1_; }
    Complex eta3() const noexcept { return eta3_; }

    // sum_n (-1)^n nome^{n(n+1)} (2n+1): the theta1'(0) series with the
    // common nome^{1/4} factor removed.
    Complex theta_slope() const noexcept { return theta_slope_; }

    /// z = z0 + 2 m omega1 + 2 n omega3 with z0 in the centered period cell.
    struct Reduction {
        Complex z0;
        long m;
        long n;
    };
    Reduction reduce(Complex z) const;

    Complex lattice_point(long m, long n) const noexcept
    {
        return 2.0 * (static_cast<double>(m) * omega1_ + static_cast<double>(n) * omega3());
    }

    /// Distance from z to the nearest lattice point 2 m omega1 + 2 n omega3.
    double distance_to_lattice(Complex z) const;

  private:
    Complex omega1_;
    Complex tau_;
    Complex nome_;
    Complex theta_slope_;
    Complex eta1_;
    Complex eta3_;
};

struct RationalKernel {
};

struct TrigonometricKernel {
    Complex scale;
};

struct HyperbolicKernel {
    Complex scale;
};

struct EllipticKernel {
    LatticeParams lattice;
};

enum class KernelVariant { Rational, Trigonometric, Hyperbolic, Elliptic, Modified };

/// One member of the sigma-like family: z, sin(az)/a, sinh(az)/a,
/// Weierstrass sigma, or any of these dressed by exp(alpha + beta z^2).
///
/// A modified kernel never wraps another modified kernel; wrapping composes
/// the exponents instead.
class SigmaKernel
{
  public:
    using Base = std::variant<RationalKernel, TrigonometricKernel, HyperbolicKernel, EllipticKernel>;

    static SigmaKernel rational();
    static SigmaKernel trigonometric(Complex scale);
    static SigmaKernel hyperbolic(Complex scale);
    static SigmaKernel elliptic(const LatticeParams &lattice);
    static SigmaKernel modified(const SigmaKernel &base, Complex alpha, Complex beta);

    KernelVariant variant() const noexcept;
    KernelVariant base_variant() const noexcept;
    const Base &base() const noexcept { return base_; }
    bool is_modified() const noexcept { return dressing_.has_value(); }
    Complex alpha() const noexcept { return dressing_ ? dressing_->alpha : Complex{}; }
    Complex beta() const noexcept { return dressing_ ? dressing_->beta : Complex{}; }

    /// Lattice of the (possibly dressed) elliptic kernel, nullptr otherwise.
    const LatticeParams *lattice() const noexcept;

    /// The undressed kernel.
    SigmaKernel base_kernel() const { return SigmaKernel(base_); }

    std::string name() const;

  private:
    struct Dressing {
        Complex alpha;
        Complex beta;
    };

    explicit SigmaKernel(Base base, std::optional<Dressing> dressing = std::nullopt)
        : base_(std::move(base)), dressing_(dressing)
    {
    }

    Base base_;
    std::optional<Dressing> dressing_;
};

const char *to_string(KernelVariant variant) noexcept;

/// Evaluate the kernel at z. Throws RangeError instead of returning a
/// non-finite value.
Complex sigma_eval(const SigmaKernel &kernel, Complex z, const EvalOptions &opts = {});

/// The kernel at z without its exp(alpha + beta z^2) dressing.
Complex sigma_base_eval(const SigmaKernel &kernel, Complex z, const EvalOptions &opts = {});

/// Weierstrass wp of an (optionally dressed) elliptic kernel's lattice.
/// Throws SingularityError(LatticePoint) within opts.singularity_margin of
/// the lattice.
Complex wp_eval(const SigmaKernel &kernel, Complex z, const EvalOptions &opts = {});

/// |T1 + T2 + T3| / max(|T1|, |T2|, |T3|, floor) for the three products of
/// the three-term sigma identity at (z, a, b, c).
double three_term_residual(const SigmaKernel &kernel, Complex z, Complex a, Complex b, Complex c,
                           const EvalOptions &opts = {});

/// Relative residual of wp(x) - wp(y) = sigma(y+x) sigma(y-x) / (sigma(x)^2 sigma(y)^2),
/// normalized by max(|wp(x)|, |wp(y)|, |rhs|). Elliptic kernels only.
double wp_sigma_residual(const SigmaKernel &kernel, Complex x, Complex y, const EvalOptions &opts = {});

/// Distance from z to the zero set of the kernel.
double nearest_zero_distance(const SigmaKernel &kernel, Complex z);

} // namespace ellcauchy

#endif
