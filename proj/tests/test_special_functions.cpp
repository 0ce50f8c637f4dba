#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ellcauchy/errors.hpp"
#include "ellcauchy/oracle.hpp"
#include "ellcauchy/special_functions.hpp"
#include "instances.hpp"

using namespace ellcauchy;
using ellcauchy::testing::elliptic_by_nome;

namespace
{

const LatticeParams square_lattice{0.5, {0.0, 1.0}};
const LatticeParams generic_lattice{0.5, {0.3, 1.1}};

LatticeParams nome_lattice(double modulus) { return *elliptic_by_nome(modulus).lattice(); }

std::vector<SigmaKernel> all_variants()
{
    return {
        SigmaKernel::rational(),
        SigmaKernel::trigonometric({0.8, 0.2}),
        SigmaKernel::hyperbolic({1.1, -0.3}),
        SigmaKernel::elliptic(square_lattice),
        SigmaKernel::elliptic(generic_lattice),
        elliptic_by_nome(0.7),
        SigmaKernel::modified(SigmaKernel::elliptic(generic_lattice), {0.2, 0.1}, {-0.3, 0.4}),
        SigmaKernel::modified(SigmaKernel::hyperbolic(1.0), {0.5, 0.0}, {0.1, -0.2}),
        // Degenerate sigma normalizations exp(+-z^2/6) sin(z), exp(-+z^2/6) sinh(z).
        SigmaKernel::modified(SigmaKernel::trigonometric(1.0), 0.0, 1.0 / 6.0),
        SigmaKernel::modified(SigmaKernel::hyperbolic(1.0), 0.0, -1.0 / 6.0),
    };
}

// Uniform point in the centered period cell (scaled), or a unit box otherwise.
Complex random_argument(const SigmaKernel &kernel, std::mt19937_64 &rng, double scale = 1.0)
{
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    if (const LatticeParams *lattice = kernel.lattice()) {
        return scale * (2.0 * u(rng) * lattice->omega1() + 2.0 * u(rng) * lattice->omega3());
    }
    return scale * Complex{2.0 * u(rng), 2.0 * u(rng)};
}

} // namespace

TEST(EvalOptions, RejectsOutOfRangeFields)
{
    EXPECT_NO_THROW(EvalOptions{}.validate());
    EXPECT_THROW((EvalOptions{0.0, 64, 1e-9}.validate()), ValidationError);
    EXPECT_THROW((EvalOptions{1e-16, 3, 1e-9}.validate()), ValidationError);
    EXPECT_THROW((EvalOptions{1e-16, 64, 0.0}.validate()), ValidationError);
}

TEST(LatticeParams, ValidatesTauAndNome)
{
    EXPECT_THROW(LatticeParams(0.5, {0.2, -1.0}), ValidationError);
    EXPECT_THROW(LatticeParams(0.5, {0.2, 0.0}), ValidationError);
    EXPECT_THROW(LatticeParams(0.0, {0.0, 1.0}), ValidationError);
    // |nome| = exp(-pi * 0.01) ~ 0.969 is above the cap.
    EXPECT_THROW(LatticeParams(0.5, {0.0, 0.01}), ValidationError);
    EXPECT_NO_THROW(LatticeParams(0.5, {0.0, 0.02}));
}

TEST(LatticeParams, NomeConsistentWithTau)
{
    for (const LatticeParams &lattice : {square_lattice, generic_lattice}) {
        const Complex recomputed = std::exp(Complex{0.0, std::numbers::pi} * lattice.tau());
        EXPECT_LE(std::abs(recomputed - lattice.nome()), 4 * std::numeric_limits<double>::epsilon());
        EXPECT_LT(std::abs(lattice.nome()), 1.0);
    }
}

TEST(LatticeParams, ReductionLandsInCenteredCell)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    for (int t = 0; t < 200; ++t) {
        const Complex z{u(rng), u(rng)};
        const auto [z0, m, n] = generic_lattice.reduce(z);
        EXPECT_LE(std::abs(z0 + generic_lattice.lattice_point(m, n) - z), 1e-12);
        const Complex w = z0 / (2.0 * generic_lattice.omega1());
        const double y = w.imag() / generic_lattice.tau().imag();
        const double x = w.real() - y * generic_lattice.tau().real();
        EXPECT_LE(std::abs(x), 0.5 + 1e-12);
        EXPECT_LE(std::abs(y), 0.5 + 1e-12);
    }
}

TEST(SigmaEval, RationalIsIdentity)
{
    EXPECT_EQ(sigma_eval(SigmaKernel::rational(), {3.0, 4.0}), Complex(3.0, 4.0));
}

TEST(SigmaEval, TrigAndHyperbolicClosedForms)
{
    const Complex a{0.8, 0.2}, z{0.4, -0.7};
    EXPECT_LE(relative_error(sigma_eval(SigmaKernel::trigonometric(a), z), std::sin(a * z) / a), 1e-15);
    EXPECT_LE(relative_error(sigma_eval(SigmaKernel::hyperbolic(a), z), std::sinh(a * z) / a), 1e-15);
}

TEST(SigmaEval, EllipticNormalizedAtOrigin)
{
    for (const LatticeParams &lattice : {square_lattice, generic_lattice, nome_lattice(0.7)}) {
        const SigmaKernel kernel = SigmaKernel::elliptic(lattice);
        EXPECT_LE(relative_error(sigma_eval(kernel, 1e-6), 1e-6), 1e-12);
        for (double x : {1e-3, 1e-5}) {
            EXPECT_LE(relative_error(sigma_eval(kernel, x) / x, 1.0), x * x * x);
        }
    }
}

TEST(SigmaEval, SquareLatticeReferenceValue)
{
    // High-precision reference from an independent multiprecision theta
    // evaluation, confirmed to 2e-9 by a Richardson-extrapolated lattice product.
    const SigmaKernel kernel = SigmaKernel::elliptic(square_lattice);
    const Complex reference{0.29808127736905314067, 0.0};
    const Complex full = sigma_eval(kernel, 0.3);
    EXPECT_LE(relative_error(full, reference), 1e-15);

    EvalOptions shallow;
    shallow.max_terms = 4;
    EXPECT_LE(relative_error(sigma_eval(kernel, 0.3, shallow), full), 1e-15);

    const Complex product = oracle::sigma_lattice_product(square_lattice, 0.3, 40);
    EXPECT_LE(relative_error(product, full), 1e-6);
}

TEST(SigmaEval, GenericLatticeReferenceValue)
{
    const Complex reference{0.20049214593822221564, 0.15017787889165396955};
    EXPECT_LE(relative_error(sigma_eval(SigmaKernel::elliptic(generic_lattice), {0.2, 0.15}), reference), 1e-14);
}

TEST(SigmaEval, OddnessAllVariants)
{
    std::mt19937_64 rng(11);
    for (const SigmaKernel &kernel : all_variants()) {
        for (int t = 0; t < 500; ++t) {
            const Complex z = random_argument(kernel, rng, 2.0);
            const Complex plus = sigma_eval(kernel, z);
            EXPECT_LE(std::abs(sigma_eval(kernel, -z) + plus), 1e-13 * std::abs(plus)) << kernel.name() << " z=" << z;
        }
    }
}

TEST(SigmaEval, QuasiPeriodicity)
{
    std::mt19937_64 rng(5);
    for (const LatticeParams &lattice : {square_lattice, generic_lattice, nome_lattice(0.7)}) {
        const SigmaKernel kernel = SigmaKernel::elliptic(lattice);
        const Complex w1 = lattice.omega1(), w3 = lattice.omega3();
        for (int t = 0; t < 200; ++t) {
            const Complex z = random_argument(kernel, rng);
            const Complex expected1 = -std::exp(2.0 * lattice.eta1() * (z + w1)) * sigma_eval(kernel, z);
            EXPECT_LE(relative_error(sigma_eval(kernel, z + 2.0 * w1), expected1), 1e-10);
            const Complex expected3 = -std::exp(2.0 * lattice.eta3() * (z + w3)) * sigma_eval(kernel, z);
            EXPECT_LE(relative_error(sigma_eval(kernel, z + 2.0 * w3), expected3), 1e-10);
        }
    }
}

TEST(SigmaEval, ModifiedWrapper)
{
    const SigmaKernel base = SigmaKernel::elliptic(generic_lattice);
    const SigmaKernel plain = SigmaKernel::modified(base, 0.0, 0.0);
    EXPECT_EQ(plain.variant(), KernelVariant::Modified);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        const Complex z = random_argument(base, rng);
        EXPECT_LE(relative_error(sigma_eval(plain, z), sigma_eval(base, z)), 1e-15);
    }

    const Complex a1{0.2, 0.1}, b1{0.3, -0.2}, a2{-0.1, 0.4}, b2{0.05, 0.05};
    const SigmaKernel twice = SigmaKernel::modified(SigmaKernel::modified(base, a1, b1), a2, b2);
    EXPECT_EQ(twice.variant(), KernelVariant::Modified);
    EXPECT_EQ(twice.base_variant(), KernelVariant::Elliptic);
    EXPECT_EQ(twice.alpha(), a1 + a2);
    EXPECT_EQ(twice.beta(), b1 + b2);
    const Complex z{0.17, -0.08};
    EXPECT_LE(relative_error(sigma_eval(twice, z), std::exp(a1 + a2 + (b1 + b2) * z * z) * sigma_eval(base, z)),
              1e-14);
}

TEST(SigmaEval, TruncationStability)
{
    std::mt19937_64 rng(13);
    EvalOptions doubled;
    doubled.max_terms = 128;
    for (double modulus : {0.1, 0.4, 0.7}) {
        const SigmaKernel kernel = elliptic_by_nome(modulus);
        for (int t = 0; t < 100; ++t) {
            const Complex z = random_argument(kernel, rng);
            EXPECT_LE(relative_error(sigma_eval(kernel, z, doubled), sigma_eval(kernel, z)), 1e-14);
        }
    }
}

TEST(SigmaEval, OverflowIsRangeError)
{
    const SigmaKernel dressed = SigmaKernel::modified(SigmaKernel::rational(), 0.0, 1.0);
    EXPECT_THROW(sigma_eval(dressed, 100.0), RangeError);
    EXPECT_THROW(sigma_eval(SigmaKernel::trigonometric(1.0), {0.0, 1000.0}), RangeError);
    EXPECT_THROW(sigma_eval(SigmaKernel::elliptic(square_lattice), 1000.5), RangeError);
}

TEST(SigmaKernel, RejectsZeroScale)
{
    EXPECT_THROW(SigmaKernel::trigonometric(0.0), ValidationError);
    EXPECT_THROW(SigmaKernel::hyperbolic(0.0), ValidationError);
}

TEST(WpEval, LaurentLeadingTerm)
{
    const SigmaKernel kernel = SigmaKernel::elliptic(square_lattice);
    const double z = 1e-3;
    EXPECT_LE(relative_error(wp_eval(kernel, z), 1.0 / (z * z)), 1e-8);
}

TEST(WpEval, EvenAndPeriodic)
{
    std::mt19937_64 rng(17);
    const SigmaKernel kernel = SigmaKernel::elliptic(generic_lattice);
    for (int t = 0; t < 200; ++t) {
        const Complex z = random_argument(kernel, rng);
        if (generic_lattice.distance_to_lattice(z) < 0.05) {
            continue;
        }
        const Complex wp = wp_eval(kernel, z);
        EXPECT_LE(relative_error(wp_eval(kernel, -z), wp), 1e-12);
        EXPECT_LE(relative_error(wp_eval(kernel, z + 2.0 * generic_lattice.omega3()), wp), 1e-10);
    }
}

TEST(WpEval, SigmaRelation)
{
    std::mt19937_64 rng(19);
    for (const LatticeParams &lattice : {square_lattice, generic_lattice}) {
        const SigmaKernel kernel = SigmaKernel::elliptic(lattice);
        for (int t = 0; t < 300; ++t) {
            const Complex x = random_argument(kernel, rng);
            const Complex y = random_argument(kernel, rng);
            if (lattice.distance_to_lattice(x) < 0.05 || lattice.distance_to_lattice(y) < 0.05) {
                continue;
            }
            EXPECT_LE(wp_sigma_residual(kernel, x, y), 1e-10) << "x=" << x << " y=" << y;
        }
    }
}

TEST(WpEval, SingularAtLatticePoints)
{
    const SigmaKernel kernel = SigmaKernel::elliptic(square_lattice);
    try {
        wp_eval(kernel, {1.0, 1.0});
        FAIL() << "expected a singularity error";
    } catch (const SingularityError &e) {
        EXPECT_EQ(e.kind(), SingularityKind::LatticePoint);
        EXPECT_LE(e.distance(), 1e-15);
    }
    EXPECT_THROW(wp_eval(SigmaKernel::rational(), 0.3), ValidationError);
}

TEST(ThreeTermResidual, VanishesWhenTwoArgumentsCoincide)
{
    std::mt19937_64 rng(23);
    for (const SigmaKernel &kernel : all_variants()) {
        const Complex z = random_argument(kernel, rng), a = random_argument(kernel, rng),
                      c = random_argument(kernel, rng);
        EXPECT_LE(three_term_residual(kernel, z, a, a, c), 1e-12) << kernel.name();
    }
}

TEST(ThreeTermResidual, RationalPolynomialIdentity)
{
    std::mt19937_64 rng(29);
    const SigmaKernel kernel = SigmaKernel::rational();
    for (int t = 0; t < 1000; ++t) {
        const Complex z = random_argument(kernel, rng), a = random_argument(kernel, rng),
                      b = random_argument(kernel, rng), c = random_argument(kernel, rng);
        EXPECT_LE(three_term_residual(kernel, z, a, b, c), 1e-13);
    }
}

TEST(ThreeTermResidual, AllVariantsRandomQuadruples)
{
    std::mt19937_64 rng(31);
    for (const SigmaKernel &kernel : all_variants()) {
        double worst = 0.0;
        for (int t = 0; t < 1000; ++t) {
            const Complex z = random_argument(kernel, rng), a = random_argument(kernel, rng),
                          b = random_argument(kernel, rng), c = random_argument(kernel, rng);
            worst = std::max(worst, three_term_residual(kernel, z, a, b, c));
        }
        EXPECT_LE(worst, 1e-10) << kernel.name();
    }
}

TEST(NearestZeroDistance, Examples)
{
    EXPECT_DOUBLE_EQ(nearest_zero_distance(SigmaKernel::rational(), 0.5), 0.5);
    EXPECT_LE(nearest_zero_distance(SigmaKernel::elliptic(square_lattice), {1.0, 1.0}), 1e-15);
    EXPECT_NEAR(nearest_zero_distance(SigmaKernel::trigonometric(1.0), 3.0), std::numbers::pi - 3.0, 1e-15);
    EXPECT_NEAR(nearest_zero_distance(SigmaKernel::hyperbolic(1.0), {0.1, 3.0}), std::abs(Complex(0.1, 3.0 - std::numbers::pi)),
                1e-15);
    const SigmaKernel dressed = SigmaKernel::modified(SigmaKernel::trigonometric(1.0), 1.0, 1.0);
    EXPECT_NEAR(nearest_zero_distance(dressed, 3.0), std::numbers::pi - 3.0, 1e-15);
}

TEST(NearestZeroDistance, MatchesBruteForceLatticeScan)
{
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int t = 0; t < 300; ++t) {
        const Complex z{u(rng), u(rng)};
        double brute = std::numeric_limits<double>::infinity();
        for (long m = -12; m <= 12; ++m) {
            for (long n = -12; n <= 12; ++n) {
                brute = std::min(brute, std::abs(z - generic_lattice.lattice_point(m, n)));
            }
        }
        EXPECT_NEAR(generic_lattice.distance_to_lattice(z), brute, 1e-13);
    }
}
