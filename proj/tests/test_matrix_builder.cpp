#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "ellcauchy/errors.hpp"
#include "ellcauchy/matrix_builder.hpp"
#include "instances.hpp"

using namespace ellcauchy;
using namespace ellcauchy::testing;

namespace
{

// N = 2 rational fixture: lambda = 1, q = (0, 1), r = (2, 3).
CauchyProblem rational_fixture(SpectralParameter lambda = Complex{1.0})
{
    return CauchyProblem({0.0, 1.0}, {2.0, 3.0}, lambda, SigmaKernel::rational());
}

void expect_matrix_near(const DenseMatrix &actual, const std::vector<std::vector<Complex>> &expected, double tol)
{
    ASSERT_EQ(actual.rows(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        for (std::size_t j = 0; j < expected[i].size(); ++j) {
            EXPECT_NEAR(std::abs(actual(i, j) - expected[i][j]), 0.0, tol) << "(" << i << "," << j << ")";
        }
    }
}

} // namespace

TEST(CauchyProblem, ShapeValidation)
{
    const SigmaKernel rational = SigmaKernel::rational();
    EXPECT_THROW(CauchyProblem({}, {}, Complex{1.0}, rational), ValidationError);
    EXPECT_THROW(CauchyProblem({0.0, 1.0}, {2.0}, Complex{1.0}, rational), ValidationError);
    EXPECT_THROW(CauchyProblem({0.0}, {2.0}, Complex{std::nan(""), 0.0}, rational), ValidationError);
    EXPECT_NO_THROW(CauchyProblem({0.0}, {2.0}, at_infinity, rational));
    try {
        CauchyProblem({0.0}, {2.0}, at_infinity, SigmaKernel::trigonometric(1.0));
        FAIL() << "infinity accepted for a trigonometric kernel";
    } catch (const ValidationError &e) {
        EXPECT_EQ(e.field(), "lambda");
    }
    EXPECT_THROW(CauchyProblem({0.0}, {2.0}, at_infinity, SigmaKernel::modified(rational, 0.0, 0.0)),
                 ValidationError);
}

TEST(LambdaSequence, SmallExamples)
{
    const auto seq = lambda_sequence(rational_fixture());
    ASSERT_EQ(seq.size(), 3u);
    EXPECT_EQ(seq[2], Complex(1.0));
    EXPECT_EQ(seq[1], Complex(-1.0));
    EXPECT_EQ(seq[0], Complex(-3.0));

    const Complex lambda{0.37, -1.2};
    const CauchyProblem same({{0.5, 0.5}}, {{0.5, 0.5}}, lambda, SigmaKernel::rational());
    EXPECT_EQ(lambda_sequence(same)[0], lambda);

    EXPECT_THROW(lambda_sequence(rational_fixture(at_infinity)), ValidationError);
}

TEST(LambdaSequence, RecursionMatchesClosedSum)
{
    InstanceGenerator gen(41);
    const KernelFamily family = family_for(SigmaKernel::rational());
    for (int t = 0; t < 100; ++t) {
        const CauchyProblem p = gen.problem(family, 3);
        const auto recursive = lambda_sequence(p);
        const auto summed = lambda_sequence_closed_sum(p);
        for (std::size_t k = 0; k < recursive.size(); ++k) {
            EXPECT_LE(std::abs(recursive[k] - summed[k]), 1e-14 * std::max(1.0, std::abs(summed[k])));
        }
    }
}

TEST(BuildCauchyLike, SingleEntryHasNoPrefactors)
{
    for (const KernelFamily &family : standard_families()) {
        InstanceGenerator gen(43);
        const CauchyProblem p = gen.problem(family, 1);
        const DenseMatrix m = build_cauchy_like(p);
        const Complex d = p.q()[0] - p.r()[0];
        const Complex lambda = p.lambda_value();
        const Complex expected = p.sigma(d + lambda) / (p.sigma(lambda) * p.sigma(d));
        EXPECT_LE(relative_error(m(0, 0), expected), 1e-15) << family.name;
        EXPECT_EQ(build_frobenius_kernel(p)(0, 0), m(0, 0));
    }
}

TEST(BuildCauchyLike, RationalFixture)
{
    // Hand evaluation with sigma(z) = z, checked in exact rational arithmetic.
    expect_matrix_near(build_cauchy_like(rational_fixture()), {{-1.5, 2.0}, {0.0, 0.5}}, 1e-15);
    expect_matrix_near(build_cauchy_like(rational_fixture(at_infinity)), {{1.5, -1.0}, {1.0, -0.5}}, 1e-15);
}

TEST(BuildFrobeniusKernel, RationalFixture)
{
    // (x + lambda) / (lambda x) = 1/x + 1/lambda.
    const CauchyProblem p = rational_fixture();
    const DenseMatrix k = build_frobenius_kernel(p);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            EXPECT_NEAR(std::abs(k(i, j) - (1.0 / (p.q()[i] - p.r()[j]) + 1.0)), 0.0, 1e-15);
        }
    }
}

TEST(BuildCauchyLike, PrefactorDiagonalIdentity)
{
    for (const KernelFamily &family : standard_families()) {
        InstanceGenerator gen(47);
        for (std::size_t n = 1; n <= 10; ++n) {
            const CauchyProblem p = gen.problem(family, n);
            const DenseMatrix full = build_cauchy_like(p);
            DenseMatrix scaled = build_frobenius_kernel(p);
            const PrefactorDiagonals pre = prefactor_diagonals(p);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    scaled(i, j) *= pre.left[i] * pre.right[j];
                }
            }
            EXPECT_LE(relative_frobenius_distance(scaled, full), 1e-12) << family.name << " N=" << n;
        }
    }
}

TEST(BuildCauchyLike, EntryFormulaAgreesWithBuilder)
{
    InstanceGenerator gen(53);
    for (const KernelFamily &family : standard_families()) {
        const CauchyProblem p = gen.problem(family, 6);
        const DenseMatrix m = build_cauchy_like(p);
        for (std::size_t i = 0; i < 6; ++i) {
            for (std::size_t j = 0; j < 6; ++j) {
                EXPECT_LE(relative_error(cauchy_like_entry(p, 6, i, j, p.lambda()), m(i, j)), 1e-12) << family.name;
            }
        }
    }
}

TEST(BuildCauchyLike, InfiniteLambdaIsTheLimit)
{
    InstanceGenerator gen(59);
    const KernelFamily family = family_for(SigmaKernel::rational());
    for (std::size_t n : {2u, 5u, 9u}) {
        const CauchyProblem finite = gen.problem(family, n);
        const double lambda = 1e6;
        const CauchyProblem large(finite.q(), finite.r(), Complex{lambda}, finite.kernel());
        const CauchyProblem infinite(finite.q(), finite.r(), at_infinity, finite.kernel());
        const DenseMatrix a = build_cauchy_like(large);
        const DenseMatrix b = build_cauchy_like(infinite);
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                worst = std::max(worst, relative_error(a(i, j), b(i, j)));
            }
        }
        EXPECT_LE(worst, 10.0 * static_cast<double>(n) / lambda);
    }
}

TEST(BuildCauchyLike, SingularityReportsTheOffendingPair)
{
    const SigmaKernel rational = SigmaKernel::rational();
    try {
        build_cauchy_like(CauchyProblem({0.0, 1.0}, {2.0, 0.0}, Complex{1.0}, rational));
        FAIL();
    } catch (const SingularityError &e) {
        EXPECT_EQ(e.kind(), SingularityKind::QrDifference);
        EXPECT_EQ(e.first(), 0u);
        EXPECT_EQ(e.second(), 1u);
    }
    try {
        build_cauchy_like(CauchyProblem({0.5, 0.5}, {2.0, 3.0}, Complex{1.0}, rational));
        FAIL();
    } catch (const SingularityError &e) {
        EXPECT_EQ(e.kind(), SingularityKind::LeftPrefactor);
    }
    try {
        build_cauchy_like(CauchyProblem({0.0, 1.0}, {2.0, 2.0}, Complex{1.0}, rational));
        FAIL();
    } catch (const SingularityError &e) {
        EXPECT_EQ(e.kind(), SingularityKind::RightPrefactor);
        EXPECT_NE(std::string(e.what()).find("r_2 - r_1"), std::string::npos) << e.what();
    }
    try {
        build_cauchy_like(CauchyProblem({0.0, 1.0}, {2.0, 3.0}, Complex{0.0}, rational));
        FAIL();
    } catch (const SingularityError &e) {
        EXPECT_EQ(e.kind(), SingularityKind::LambdaChain);
    }
    // Trig zeros are at k pi: q_1 - r_1 = pi is singular.
    EXPECT_THROW(build_cauchy_like(CauchyProblem({std::numbers::pi}, {0.0}, Complex{0.3}, SigmaKernel::trigonometric(1.0))),
                 SingularityError);
}

TEST(BuildFrobeniusKernel, ToleratesRepeatedPoints)
{
    const CauchyProblem p({0.5, 0.5}, {2.0, 3.0}, Complex{1.0}, SigmaKernel::rational());
    EXPECT_THROW(build_cauchy_like(p), SingularityError);
    EXPECT_NO_THROW(build_frobenius_kernel(p));
}

TEST(ReversalRelabel, ReversesPoints)
{
    const CauchyProblem rev = reversal_relabel(rational_fixture());
    EXPECT_EQ(rev.q(), (std::vector<Complex>{1.0, 0.0}));
    EXPECT_EQ(rev.r(), (std::vector<Complex>{3.0, 2.0}));
    EXPECT_EQ(rev.lambda_value(), Complex(1.0));

    InstanceGenerator gen(61);
    const CauchyProblem p = gen.problem(family_for(elliptic_by_nome(0.3)), 7);
    const CauchyProblem twice = reversal_relabel(reversal_relabel(p));
    EXPECT_EQ(twice.q(), p.q());
    EXPECT_EQ(twice.r(), p.r());

    const CauchyProblem single = gen.problem(family_for(SigmaKernel::rational()), 1);
    EXPECT_EQ(reversal_relabel(single).q(), single.q());
}
