#include "ellcauchy/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "ellcauchy/errors.hpp"

namespace ellcauchy
{

namespace
{

constexpr double pi = std::numbers::pi;
constexpr Complex I{0.0, 1.0};

// Term budget for the lattice constants. They are computed once, so the
// series is simply run to machine precision.
constexpr int lattice_constant_terms = 200;

template <typename... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <typename... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// A kernel value kept as mantissa * exp(exponent) until the very end, so
// that the quadratic exponential prefactors are combined before exp().
struct Scaled {
    Complex mantissa;
    Complex exponent;
};

Complex finalize(const Scaled &s, const char *what)
{
    if (s.mantissa == Complex{}) {
        return {};
    }
    const Complex value = s.exponent == Complex{} ? s.mantissa : s.mantissa * std::exp(s.exponent);
    if (!is_finite(value)) {
        std::ostringstream os;
        os << what << ": result overflows (exponent " << s.exponent << ")";
        throw RangeError(os.str());
    }
    return value;
}

// Odd theta series sum_n (-1)^n nome^{n(n+1)} sin((2n+1) v) and, optionally,
// its first and second derivatives in v. The common nome^{1/4} factor of
// theta1 is dropped; it cancels in every ratio used below.
struct ThetaSums {
    Complex value;
    Complex first;
    Complex second;
};

ThetaSums theta_odd_series(Complex v, Complex nome, const EvalOptions &opts, bool derivatives)
{
    ThetaSums out{};
    const double abs_nome = std::abs(nome);
    const double growth = std::abs(v.imag());
    const Complex nome2 = nome * nome;
    Complex weight = 1.0;       // nome^{n(n+1)}
    Complex step = nome2;       // nome^{2(n+1)}
    double weight_abs = 1.0;
    double step_abs = abs_nome * abs_nome;
    for (int n = 0; n < opts.max_terms; ++n) {
        const double k = 2.0 * n + 1.0;
        const Complex signed_weight = (n % 2 == 0) ? weight : -weight;
        const Complex s = std::sin(k * v);
        out.value += signed_weight * s;
        if (derivatives) {
            out.first += signed_weight * k * std::cos(k * v);
            out.second -= signed_weight * k * k * s;
        }
        // Bound on the magnitude of this term's contribution.
        const double bound = weight_abs * std::cosh(k * growth) * (derivatives ? k * k : 1.0);
        const double scale = derivatives ? std::max(std::abs(out.value), std::abs(out.first))
                                         : std::abs(out.value);
        if (n > 0 && bound <= opts.series_tolerance * scale) {
            break;
        }
        weight *= step;
        step *= nome2;
        weight_abs *= step_abs;
        step_abs *= abs_nome * abs_nome;
        if (weight_abs == 0.0) {
            break;
        }
    }
    return out;
}

Scaled elliptic_sigma(const LatticeParams &lattice, Complex z, const EvalOptions &opts)
{
    const auto [z0, m, n] = lattice.reduce(z);
    const Complex omega1 = lattice.omega1();
    const Complex v = pi * z0 / (2.0 * omega1);
    const ThetaSums theta = theta_odd_series(v, lattice.nome(), opts, false);

    Scaled out;
    out.mantissa = (2.0 * omega1 / pi) * theta.value / lattice.theta_slope();
    out.exponent = lattice.eta1() * z0 * z0 / (2.0 * omega1);
    if (m != 0 || n != 0) {
        // sigma(z0 + 2m w1 + 2n w3) = (-1)^{m+n+mn} exp(2(m eta1 + n eta3)(z0 + m w1 + n w3)) sigma(z0)
        const double dm = static_cast<double>(m);
        const double dn = static_cast<double>(n);
        const Complex eta = dm * lattice.eta1() + dn * lattice.eta3();
        const Complex half = dm * omega1 + dn * lattice.omega3();
        out.exponent += 2.0 * eta * (z0 + half);
        if (((m + n + m * n) % 2) != 0) {
            out.mantissa = -out.mantissa;
        }
    }
    return out;
}

Scaled scaled_sigma(const SigmaKernel &kernel, Complex z, const EvalOptions &opts, bool dressed = true)
{
    Scaled out = std::visit(
        overloaded{
            [&](const RationalKernel &) { return Scaled{z, 0.0}; },
            [&](const TrigonometricKernel &k) { return Scaled{std::sin(k.scale * z) / k.scale, 0.0}; },
            [&](const HyperbolicKernel &k) { return Scaled{std::sinh(k.scale * z) / k.scale, 0.0}; },
            [&](const EllipticKernel &k) { return elliptic_sigma(k.lattice, z, opts); },
        },
        kernel.base());
    if (dressed && kernel.is_modified()) {
        out.exponent += kernel.alpha() + kernel.beta() * z * z;
    }
    if (!is_finite(out.mantissa)) {
        std::ostringstream os;
        os << kernel.name() << " kernel overflows at z = " << z;
        throw RangeError(os.str());
    }
    return out;
}

double distance_to_integer_multiple(Complex t, Complex period)
{
    // Zeros at k * period; t = z / period.
    const double k = std::round(t.real());
    return std::abs(period) * std::abs(t - Complex{k, 0.0});
}

} // namespace

void EvalOptions::validate() const
{
    if (!(series_tolerance > 0.0)) {
        throw ValidationError("series_tolerance", "must be positive");
    }
    if (max_terms < 4) {
        throw ValidationError("max_terms", "must be at least 4");
    }
    if (!(singularity_margin > 0.0)) {
        throw ValidationError("singularity_margin", "must be positive");
    }
}

LatticeParams::LatticeParams(Complex omega1, Complex tau) : omega1_(omega1), tau_(tau)
{
    if (!is_finite(omega1) || omega1 == Complex{}) {
        throw ValidationError("omega1", "must be finite and non-zero");
    }
    if (!is_finite(tau) || !(tau.imag() > 0.0)) {
        throw ValidationError("tau", "imaginary part must be positive");
    }
    nome_ = std::exp(I * pi * tau);
    if (std::abs(nome_) > max_nome_modulus) {
        std::ostringstream os;
        os << "|nome| = " << std::abs(nome_) << " exceeds " << max_nome_modulus;
        throw ValidationError("tau", os.str());
    }

    // theta1'(0) and theta1'''(0), both without the nome^{1/4} factor.
    Complex slope{}, cubic{};
    const Complex nome2 = nome_ * nome_;
    Complex weight = 1.0, step = nome2;
    for (int n = 0; n < lattice_constant_terms; ++n) {
        const double k = 2.0 * n + 1.0;
        const Complex w = (n % 2 == 0) ? weight : -weight;
        slope += w * k;
        cubic += w * k * k * k;
        if (std::abs(w) * k * k * k <= std::numeric_limits<double>::epsilon() * 1e-2 * std::abs(cubic)) {
            break;
        }
        weight *= step;
        step *= nome2;
    }
    theta_slope_ = slope;
    eta1_ = pi * pi / (12.0 * omega1_) * cubic / slope;
    // Legendre relation eta1 omega3 - eta3 omega1 = i pi / 2.
    eta3_ = (eta1_ * omega3() - I * pi / 2.0) / omega1_;
}

LatticeParams::Reduction LatticeParams::reduce(Complex z) const
{
    // z / (2 omega1) = x + y tau with real x, y.
    const Complex w = z / (2.0 * omega1_);
    const double y = w.imag() / tau_.imag();
    const double x = w.real() - y * tau_.real();
    const long m = std::lround(x);
    const long n = std::lround(y);
    return {z - lattice_point(m, n), m, n};
}

double LatticeParams::distance_to_lattice(Complex z) const
{
    const Reduction r = reduce(z);
    double best = std::numeric_limits<double>::infinity();
    for (long dm = -1; dm <= 1; ++dm) {
        for (long dn = -1; dn <= 1; ++dn) {
            best = std::min(best, std::abs(r.z0 - lattice_point(dm, dn)));
        }
    }
    return best;
}

SigmaKernel SigmaKernel::rational() { return SigmaKernel(RationalKernel{}); }

SigmaKernel SigmaKernel::trigonometric(Complex scale)
{
    if (!is_finite(scale) || scale == Complex{}) {
        throw ValidationError("a", "trigonometric scale must be finite and non-zero");
    }
    return SigmaKernel(TrigonometricKernel{scale});
}

SigmaKernel SigmaKernel::hyperbolic(Complex scale)
{
    if (!is_finite(scale) || scale == Complex{}) {
        throw ValidationError("a", "hyperbolic scale must be finite and non-zero");
    }
    return SigmaKernel(HyperbolicKernel{scale});
}

SigmaKernel SigmaKernel::elliptic(const LatticeParams &lattice) { return SigmaKernel(EllipticKernel{lattice}); }

SigmaKernel SigmaKernel::modified(const SigmaKernel &base, Complex alpha, Complex beta)
{
    if (!is_finite(alpha)) {
        throw ValidationError("alpha", "must be finite");
    }
    if (!is_finite(beta)) {
        throw ValidationError("beta", "must be finite");
    }
    return SigmaKernel(base.base_, Dressing{base.alpha() + alpha, base.beta() + beta});
}

KernelVariant SigmaKernel::base_variant() const noexcept
{
    switch (base_.index()) {
    case 0:
        return KernelVariant::Rational;
    case 1:
        return KernelVariant::Trigonometric;
    case 2:
        return KernelVariant::Hyperbolic;
    default:
        return KernelVariant::Elliptic;
    }
}

KernelVariant SigmaKernel::variant() const noexcept
{
    return is_modified() ? KernelVariant::Modified : base_variant();
}

const LatticeParams *SigmaKernel::lattice() const noexcept
{
    if (const auto *e = std::get_if<EllipticKernel>(&base_)) {
        return &e->lattice;
    }
    return nullptr;
}

std::string SigmaKernel::name() const
{
    std::string out = to_string(base_variant());
    if (is_modified()) {
        out = "modified(" + out + ")";
    }
    return out;
}

const char *to_string(KernelVariant variant) noexcept
{
    switch (variant) {
    case KernelVariant::Rational:
        return "rational";
    case KernelVariant::Trigonometric:
        return "trig";
    case KernelVariant::Hyperbolic:
        return "hyperbolic";
    case KernelVariant::Elliptic:
        return "elliptic";
    case KernelVariant::Modified:
        return "modified";
    }
    return "unknown";
}

Complex sigma_eval(const SigmaKernel &kernel, Complex z, const EvalOptions &opts)
{
    return finalize(scaled_sigma(kernel, z, opts), "sigma");
}

Complex sigma_base_eval(const SigmaKernel &kernel, Complex z, const EvalOptions &opts)
{
    return finalize(scaled_sigma(kernel, z, opts, false), "sigma");
}

Complex wp_eval(const SigmaKernel &kernel, Complex z, const EvalOptions &opts)
{
    const LatticeParams *lattice = kernel.lattice();
    if (lattice == nullptr) {
        throw ValidationError("kernel", "wp is defined for elliptic kernels only");
    }
    const double distance = lattice->distance_to_lattice(z);
    if (distance <= opts.singularity_margin) {
        throw SingularityError(SingularityKind::LatticePoint, 0, 0, z, distance);
    }
    const Complex omega1 = lattice->omega1();
    const Complex z0 = lattice->reduce(z).z0;
    const Complex v = pi * z0 / (2.0 * omega1);
    const ThetaSums t = theta_odd_series(v, lattice->nome(), opts, true);
    // wp = -zeta' with zeta(z) = eta1 z / omega1 + (pi / 2 omega1) theta'(v) / theta(v).
    const Complex log_ratio = t.first / t.value;
    const Complex c = pi / (2.0 * omega1);
    return -lattice->eta1() / omega1 - c * c * (t.second / t.value - log_ratio * log_ratio);
}

double three_term_residual(const SigmaKernel &kernel, Complex z, Complex a, Complex b, Complex c,
                           const EvalOptions &opts)
{
    const auto s = [&](Complex x) { return sigma_eval(kernel, x, opts); };
    const Complex t1 = s(z + a) * s(z - a) * s(b + c) * s(b - c);
    const Complex t2 = s(z + b) * s(z - b) * s(c + a) * s(c - a);
    const Complex t3 = s(z + c) * s(z - c) * s(a + b) * s(a - b);
    const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3),
                                   std::numeric_limits<double>::min()});
    return std::abs(t1 + t2 + t3) / scale;
}

double wp_sigma_residual(const SigmaKernel &kernel, Complex x, Complex y, const EvalOptions &opts)
{
    if (kernel.lattice() == nullptr) {
        throw ValidationError("kernel", "wp is defined for elliptic kernels only");
    }
    // The identity holds for the undressed sigma; a dressing changes the
    // right-hand side by exp(-2 alpha).
    const SigmaKernel sigma = kernel.base_kernel();
    const Complex lhs = wp_eval(sigma, x, opts) - wp_eval(sigma, y, opts);
    const Complex sx = sigma_eval(sigma, x, opts);
    const Complex sy = sigma_eval(sigma, y, opts);
    const Complex rhs = sigma_eval(sigma, y + x, opts) * sigma_eval(sigma, y - x, opts) / (sx * sx * sy * sy);
    const double scale =
        std::max({std::abs(wp_eval(sigma, x, opts)), std::abs(wp_eval(sigma, y, opts)), std::abs(rhs),
                  std::numeric_limits<double>::min()});
    return std::abs(lhs - rhs) / scale;
}

double nearest_zero_distance(const SigmaKernel &kernel, Complex z)
{
    return std::visit(overloaded{
                          [&](const RationalKernel &) { return std::abs(z); },
                          [&](const TrigonometricKernel &k) {
                              const Complex period = pi / k.scale;
                              return distance_to_integer_multiple(z / period, period);
                          },
                          [&](const HyperbolicKernel &k) {
                              const Complex period = I * pi / k.scale;
                              return distance_to_integer_multiple(z / period, period);
                          },
                          [&](const EllipticKernel &k) { return k.lattice.distance_to_lattice(z); },
                      },
                      kernel.base());
}

} // namespace ellcauchy
