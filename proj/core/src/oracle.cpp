#include "ellcauchy/oracle.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "ellcauchy/errors.hpp"

namespace ellcauchy::oracle
{

namespace
{

constexpr double growth_limit = 1e8;

void require_square(const DenseMatrix &matrix)
{
    if (!matrix.is_square() || matrix.rows() == 0) {
        throw ValidationError("matrix", "must be square and non-empty");
    }
}

// In-place unpivoted elimination; returns max |U| for the growth check.
//
// A pivot counts as vanished when it is below the roundoff accumulated while
// forming it, |a_kk| + sum_j |l_kj u_jk|. The test is invariant under row and
// column scaling, which matters here: prefactor products spread the entries
// of a Cauchy-like matrix over many orders of magnitude.
double eliminate_unpivoted(DenseMatrix &work, DenseMatrix *lower)
{
    const std::size_t n = work.rows();
    const double noise = 4.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon();
    std::vector<double> accumulated(n);
    for (std::size_t i = 0; i < n; ++i) {
        accumulated[i] = std::abs(work(i, i));
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex pivot = work(k, k);
        if (!(std::abs(pivot) > noise * accumulated[k]) || !is_finite(pivot)) {
            throw BreakdownError(k, std::abs(pivot));
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex factor = work(i, k) / pivot;
            if (lower != nullptr) {
                (*lower)(i, k) = factor;
            }
            work(i, k) = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) {
                work(i, j) -= factor * work(k, j);
            }
            accumulated[i] += std::abs(factor * work(k, i));
        }
    }
    return work.max_abs();
}

std::vector<Complex> solve_lower_unit(const DenseMatrix &l, std::vector<Complex> b)
{
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            b[i] -= l(i, j) * b[j];
        }
    }
    return b;
}

std::vector<Complex> solve_upper(const DenseMatrix &u, std::vector<Complex> b)
{
    for (std::size_t ii = b.size(); ii-- > 0;) {
        for (std::size_t j = ii + 1; j < b.size(); ++j) {
            b[ii] -= u(ii, j) * b[j];
        }
        b[ii] /= u(ii, ii);
    }
    return b;
}

double vector_norm(const std::vector<Complex> &v)
{
    double s = 0.0;
    for (const auto &x : v) {
        s += std::norm(x);
    }
    return std::sqrt(s);
}

void normalize(std::vector<Complex> &v)
{
    const double norm = vector_norm(v);
    for (auto &x : v) {
        x /= norm;
    }
}

} // namespace

LuFactors lu_doolittle(const DenseMatrix &matrix)
{
    require_square(matrix);
    LuFactors out{DenseMatrix::identity(matrix.rows()), matrix};
    eliminate_unpivoted(out.upper, &out.lower);
    return out;
}

Complex det_unpivoted(const DenseMatrix &matrix)
{
    require_square(matrix);
    DenseMatrix work = matrix;
    eliminate_unpivoted(work, nullptr);
    Complex det = 1.0;
    for (std::size_t k = 0; k < work.rows(); ++k) {
        det *= work(k, k);
    }
    return det;
}

Complex det_partial_pivot(const DenseMatrix &matrix)
{
    require_square(matrix);
    DenseMatrix work = matrix;
    const std::size_t n = work.rows();
    Complex det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = k;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(work(i, k)) > std::abs(work(best, k))) {
                best = i;
            }
        }
        if (work(best, k) == Complex{}) {
            return {};
        }
        if (best != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work(k, j), work(best, j));
            }
            det = -det;
        }
        const Complex pivot = work(k, k);
        det *= pivot;
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex factor = work(i, k) / pivot;
            for (std::size_t j = k + 1; j < n; ++j) {
                work(i, j) -= factor * work(k, j);
            }
        }
    }
    return det;
}

Complex det_numeric(const DenseMatrix &matrix)
{
    require_square(matrix);
    DenseMatrix work = matrix;
    const double growth = eliminate_unpivoted(work, nullptr) / matrix.max_abs();
    if (growth > growth_limit) {
        return det_partial_pivot(matrix);
    }
    Complex det = 1.0;
    for (std::size_t k = 0; k < work.rows(); ++k) {
        det *= work(k, k);
    }
    return det;
}

double condition_estimate(const DenseMatrix &matrix, int iterations)
{
    const LuFactors lu = lu_doolittle(matrix);
    const std::size_t n = matrix.rows();

    // ||A||_2 from power iteration on A^H A.
    std::vector<Complex> v(n, Complex{1.0, 0.0});
    normalize(v);
    double norm_a = 0.0;
    for (int it = 0; it < iterations; ++it) {
        std::vector<Complex> av(n), ahav(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                av[i] += matrix(i, j) * v[j];
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i) {
                ahav[j] += std::conj(matrix(i, j)) * av[i];
            }
        }
        norm_a = std::sqrt(vector_norm(ahav));
        v = std::move(ahav);
        normalize(v);
    }

    // ||A^-1||_2 from power iteration on A^-1 (A^-1)^H via the LU solves.
    std::vector<Complex> w(n, Complex{1.0, 0.0});
    normalize(w);
    double norm_inv = 0.0;
    for (int it = 0; it < iterations; ++it) {
        // y = A^-H w: solve U^H z = w, then L^H y = z.
        std::vector<Complex> z(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            Complex s = w[i];
            for (std::size_t j = 0; j < i; ++j) {
                s -= std::conj(lu.upper(j, i)) * z[j];
            }
            z[i] = s / std::conj(lu.upper(i, i));
        }
        for (std::size_t ii = n; ii-- > 0;) {
            Complex s = z[ii];
            for (std::size_t j = ii + 1; j < n; ++j) {
                s -= std::conj(lu.lower(j, ii)) * y[j];
            }
            y[ii] = s;
        }
        const std::vector<Complex> x = solve_upper(lu.upper, solve_lower_unit(lu.lower, y));
        norm_inv = std::sqrt(vector_norm(x));
        w = x;
        normalize(w);
    }
    return norm_a * norm_inv;
}

DenseMatrix multiply_factors(const DecompositionResult &result)
{
    const std::size_t n = result.size();
    DenseMatrix out(n, n);
    const bool udl = result.order == FactorOrder::UDL;
    const TriangularFactor &left = udl ? result.upper : result.lower;
    const TriangularFactor &right = udl ? result.lower : result.upper;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // UDL: k runs over max(i, j)..n-1; LDU: over 0..min(i, j).
            const std::size_t first = udl ? std::max(i, j) : 0;
            const std::size_t last = udl ? n - 1 : std::min(i, j);
            Complex sum{};
            for (std::size_t k = first; k <= last; ++k) {
                sum += left.at(i, k) * result.diagonal.at(k, k) * right.at(k, j);
            }
            out(i, j) = sum;
        }
    }
    return out;
}

ResidualReport reconstruct_and_report(DecompositionResult &result, const DenseMatrix &matrix)
{
    if (matrix.rows() != result.size() || matrix.cols() != result.size()) {
        throw ValidationError("matrix", "dimensions do not match the factors");
    }
    const DenseMatrix product = multiply_factors(result);
    ResidualReport report;
    report.frobenius_relative = relative_frobenius_distance(product, matrix);
    const double scale = matrix.max_abs();
    const DenseMatrix difference = product - matrix;
    report.max_entry_relative = scale > 0.0 ? difference.max_abs() / scale : difference.max_abs();
    result.reconstruction_residual = report.frobenius_relative;
    return report;
}

Complex sigma_lattice_product(const LatticeParams &lattice, Complex z, int cutoff)
{
    if (cutoff < 10) {
        throw ValidationError("cutoff", "must be at least 10");
    }
    // Accumulate log of the product; each factor is 1 + O((z/w)^3).
    Complex log_sum{};
    for (long m = -cutoff; m <= cutoff; ++m) {
        for (long n = -cutoff; n <= cutoff; ++n) {
            if (m == 0 && n == 0) {
                continue;
            }
            const Complex x = z / lattice.lattice_point(m, n);
            log_sum += std::log(1.0 - x) + x + 0.5 * x * x;
        }
    }
    return z * std::exp(log_sum);
}

} // namespace ellcauchy::oracle
