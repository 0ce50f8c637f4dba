#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>

#include "ellcauchy/errors.hpp"
#include "ellcauchy/gauss_decomposition.hpp"
#include "ellcauchy/matrix_builder.hpp"
#include "ellcauchy/oracle.hpp"
#include "json_writer.hpp"
#include "problem_document.hpp"

namespace ellcauchy::cli
{

namespace
{

constexpr double compare_tolerance = 1e-11;
constexpr double identity_tolerance = 1e-9;

struct Settings {
    std::string input = "-";
    bool bare = false;
    std::string method = "closed";
    bool compare = false;
    std::string rows;
    std::string cols;
    int trials = 100;
    std::uint64_t seed = default_seed;
    double tolerance = 1e-9;
};

struct Outcome {
    Json document;
    int code = exit_success;
};

class Stopwatch
{
  public:
    double elapsed_ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json read_document(const std::string &input, std::istream &in)
{
    try {
        if (input == "-") {
            return Json::parse(in);
        }
        std::ifstream file(input);
        if (!file) {
            throw ValidationError("input", "cannot open " + input);
        }
        return Json::parse(file);
    } catch (const Json::parse_error &e) {
        throw ValidationError("document", e.what());
    }
}

Json matrix_to_json(const DenseMatrix &m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(complex_to_json(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json factor_to_json(const TriangularFactor &f) { return matrix_to_json(f.to_dense()); }

Json index_list(const std::vector<std::size_t> &indices)
{
    Json out = Json::array();
    for (std::size_t k : indices) {
        out.push_back(k + 1);
    }
    return out;
}

// "1,3,4" -> {0, 2, 3}
std::vector<std::size_t> parse_index_list(const std::string &text, const char *field)
{
    std::vector<std::size_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find(',', start), text.size());
        const std::string token = text.substr(start, end - start);
        std::size_t used = 0;
        long value = 0;
        try {
            value = std::stol(token, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != token.size() || value < 1) {
            throw ValidationError(field, "expected comma-separated 1-based indices, got \"" + text + "\"");
        }
        out.push_back(static_cast<std::size_t>(value - 1));
        start = end + 1;
    }
    return out;
}

double max_relative_difference(const TriangularFactor &a, const TriangularFactor &b)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (a.in_structure(i, j)) {
                worst = std::max(worst, relative_error(a.at(i, j), b.at(i, j)));
            }
        }
    }
    return worst;
}

double factor_difference(const DecompositionResult &a, const DecompositionResult &b)
{
    return std::max({max_relative_difference(a.upper, b.upper), max_relative_difference(a.diagonal, b.diagonal),
                     max_relative_difference(a.lower, b.lower)});
}

Outcome cmd_build(const Settings &s, std::istream &in)
{
    const CauchyProblem problem = parse_problem(read_document(s.input, in));
    const Stopwatch clock;
    const DenseMatrix matrix = s.bare ? build_frobenius_kernel(problem) : build_cauchy_like(problem);
    const double elapsed = clock.elapsed_ms();

    Json doc;
    doc["command"] = "build";
    doc["bare"] = s.bare;
    doc["problem"] = problem_to_json(problem);
    doc["matrix"] = matrix_to_json(matrix);
    doc["timing_ms"] = elapsed;
    return {doc};
}

DecompositionResult run_method(const CauchyProblem &problem, const std::string &method)
{
    if (method == "closed") {
        return decompose_closed_form(problem);
    }
    if (method == "peeling") {
        return decompose_peeling(problem);
    }
    return decompose_ldu(problem);
}

Json decomposition_document(const CauchyProblem &problem, const std::string &method)
{
    const Stopwatch clock;
    DecompositionResult result = run_method(problem, method);
    const double elapsed = clock.elapsed_ms();

    const DenseMatrix target = result.order == FactorOrder::LDU ? ldu_target(problem) : build_cauchy_like(problem);
    const oracle::ResidualReport report = oracle::reconstruct_and_report(result, target);
    Json residuals;
    residuals["frobenius_relative"] = report.frobenius_relative;
    residuals["max_entry_relative"] = report.max_entry_relative;
    try {
        residuals["determinant_relative"] = relative_error(diagonal_product(result), oracle::det_numeric(target));
        residuals["condition_estimate"] = oracle::condition_estimate(target);
    } catch (const BreakdownError &) {
        // The oracle columns are optional; the factors themselves stand.
    }

    Json lambdas = Json::array();
    for (Complex value : result.lambda_sequence) {
        lambdas.push_back(complex_to_json(value));
    }

    Json doc;
    doc["command"] = "decompose";
    doc["method"] = method;
    doc["order"] = to_string(result.order);
    doc["n"] = problem.size();
    doc["kernel"] = problem.kernel().name();
    doc["lambda_sequence"] = std::move(lambdas);
    doc["factors"] = {{"U", factor_to_json(result.upper)},
                      {"D", factor_to_json(result.diagonal)},
                      {"L", factor_to_json(result.lower)}};
    doc["residuals"] = std::move(residuals);
    if (result.ldu_target_deviation) {
        doc["diagnostics"] = {{"ldu_target_deviation", *result.ldu_target_deviation}};
    }
    doc["timing_ms"] = elapsed;
    return doc;
}

Outcome cmd_decompose(const Settings &s, std::istream &in)
{
    const CauchyProblem problem = parse_problem(read_document(s.input, in));
    if (!s.compare) {
        return {decomposition_document(problem, s.method)};
    }
    const double difference = factor_difference(decompose_closed_form(problem), decompose_peeling(problem));
    const bool pass = difference <= compare_tolerance;
    Json doc;
    doc["command"] = "decompose";
    doc["compare"] = true;
    doc["closed"] = decomposition_document(problem, "closed");
    doc["peeling"] = decomposition_document(problem, "peeling");
    doc["agreement"] = {{"max_entry_relative", difference}, {"tolerance", compare_tolerance}, {"pass", pass}};
    return {doc, pass ? exit_success : exit_tolerance};
}

Outcome cmd_det(const Settings &s, std::istream &in)
{
    const CauchyProblem problem = parse_problem(read_document(s.input, in));
    if (s.rows.empty() != s.cols.empty()) {
        throw ValidationError(s.rows.empty() ? "rows" : "cols", "--rows and --cols must be given together");
    }
    const std::size_t n = problem.size();
    std::vector<std::size_t> full(n);
    std::iota(full.begin(), full.end(), 0u);
    std::vector<std::size_t> rows = s.rows.empty() ? full : parse_index_list(s.rows, "rows");
    std::vector<std::size_t> cols = s.cols.empty() ? full : parse_index_list(s.cols, "cols");

    const Stopwatch clock;
    Complex value;
    if (s.rows.empty()) {
        value = determinant_closed_form(problem);
    } else {
        value = minor_frobenius(problem, rows, cols);
        std::sort(rows.begin(), rows.end());
        std::sort(cols.begin(), cols.end());
        if (rows == full && cols == full) {
            value = determinant_closed_form(problem);
        }
    }
    const double elapsed = clock.elapsed_ms();
    const Complex reference = oracle::det_numeric(build_cauchy_like(problem).submatrix(rows, cols));

    Json doc;
    doc["command"] = "det";
    doc["n"] = n;
    doc["rows"] = index_list(rows);
    doc["cols"] = index_list(cols);
    doc["determinant"] = complex_to_json(value);
    doc["oracle_determinant"] = complex_to_json(reference);
    doc["relative_deviation"] = relative_error(value, reference);
    doc["timing_ms"] = elapsed;
    return {doc};
}

// A random argument inside the region where the kernel's identities are
// well conditioned: the centered period cell (elliptic), a strip of height
// one around the real (trig) or imaginary (hyperbolic) axis of a z, or the
// unit box.
Complex sample_argument(const SigmaKernel &kernel, std::mt19937_64 &rng)
{
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const double u = unit(rng), v = unit(rng);
    if (const LatticeParams *lattice = kernel.lattice()) {
        return 0.5 * (u * lattice->omega1() + v * lattice->omega3());
    }
    if (const auto *trig = std::get_if<TrigonometricKernel>(&kernel.base())) {
        return Complex(u, 0.5 * v) / trig->scale;
    }
    if (const auto *hyp = std::get_if<HyperbolicKernel>(&kernel.base())) {
        return Complex(0.5 * u, v) / hyp->scale;
    }
    return {u, v};
}

Outcome cmd_identity_check(const Settings &s, std::istream &in)
{
    const KernelDocument doc_in = parse_kernel_document(read_document(s.input, in));
    if (s.trials < 1) {
        throw ValidationError("trials", "must be at least 1");
    }
    const SigmaKernel &kernel = doc_in.kernel;
    std::mt19937_64 rng(s.seed);
    double three_term = 0.0;
    for (int t = 0; t < s.trials; ++t) {
        const Complex z = sample_argument(kernel, rng), a = sample_argument(kernel, rng);
        const Complex b = sample_argument(kernel, rng), c = sample_argument(kernel, rng);
        three_term = std::max(three_term, three_term_residual(kernel, z, a, b, c, doc_in.options));
    }
    bool pass = three_term <= identity_tolerance;

    Json doc;
    doc["command"] = "identity-check";
    doc["kernel"] = kernel_to_json(kernel);
    doc["trials"] = s.trials;
    doc["seed"] = s.seed;
    doc["three_term_max_residual"] = three_term;
    if (kernel.lattice() != nullptr) {
        double wp_sigma = 0.0;
        for (int t = 0; t < s.trials; ++t) {
            const Complex x = sample_argument(kernel, rng), y = sample_argument(kernel, rng);
            wp_sigma = std::max(wp_sigma, wp_sigma_residual(kernel, x, y, doc_in.options));
        }
        doc["wp_sigma_max_residual"] = wp_sigma;
        pass = pass && wp_sigma <= identity_tolerance;
    }
    doc["tolerance"] = identity_tolerance;
    doc["pass"] = pass;
    return {doc, pass ? exit_success : exit_tolerance};
}

Outcome cmd_verify(const Settings &s, std::istream &in)
{
    const CauchyProblem problem = parse_problem(read_document(s.input, in));
    if (!(s.tolerance > 0.0)) {
        throw ValidationError("tolerance", "must be positive");
    }
    const Stopwatch clock;
    DecompositionResult closed = decompose_closed_form(problem);
    const DecompositionResult peeled = decompose_peeling(problem);
    const DenseMatrix matrix = build_cauchy_like(problem);
    const double reconstruction = oracle::reconstruct_and_report(closed, matrix).frobenius_relative;
    const double dual_path = factor_difference(closed, peeled);
    const double determinant = relative_error(determinant_closed_form(problem), oracle::det_numeric(matrix));
    const double elapsed = clock.elapsed_ms();

    Json checks = Json::array();
    bool pass = true;
    for (const auto &[name, value] : {std::pair{"reconstruction", reconstruction},
                                      std::pair{"closed_vs_peeling", dual_path},
                                      std::pair{"determinant_vs_oracle", determinant}}) {
        const bool ok = value <= s.tolerance;
        pass = pass && ok;
        checks.push_back({{"name", name}, {"value", value}, {"pass", ok}});
    }
    Json doc;
    doc["command"] = "verify";
    doc["n"] = problem.size();
    doc["kernel"] = problem.kernel().name();
    doc["tolerance"] = s.tolerance;
    doc["checks"] = std::move(checks);
    doc["pass"] = pass;
    doc["timing_ms"] = elapsed;
    return {doc, pass ? exit_success : exit_tolerance};
}

} // namespace

int run(int argc, const char *const *argv, std::istream &in, std::ostream &out, std::ostream &err)
{
    Settings s;
    CLI::App app{"Gauss decompositions and determinants of elliptic Cauchy-like matrices", "ellcauchy"};
    app.require_subcommand(1);

    const auto add_input = [&](CLI::App *sub) {
        sub->add_option("input", s.input, "problem document (JSON); '-' or omitted reads standard input");
    };
    CLI::App *build = app.add_subcommand("build", "emit the Cauchy-like matrix");
    add_input(build);
    build->add_flag("--bare", s.bare, "emit the kernel matrix without row and column prefactors");

    CLI::App *decompose = app.add_subcommand("decompose", "UDL (or LDU) factors with reconstruction residuals");
    add_input(decompose);
    decompose->add_option("--method", s.method, "closed, peeling or ldu")
        ->check(CLI::IsMember({"closed", "peeling", "ldu"}));
    decompose->add_flag("--compare", s.compare, "run closed and peeling and report their agreement");

    CLI::App *det = app.add_subcommand("det", "determinant, or a minor with --rows/--cols");
    add_input(det);
    det->add_option("--rows", s.rows, "comma-separated 1-based row indices");
    det->add_option("--cols", s.cols, "comma-separated 1-based column indices");

    CLI::App *identity = app.add_subcommand("identity-check", "three-term and wp-sigma identity residuals");
    add_input(identity);
    identity->add_option("--trials", s.trials, "number of random argument tuples")->capture_default_str();
    identity->add_option("--seed", s.seed, "random seed")->capture_default_str();

    CLI::App *verify = app.add_subcommand("verify", "check the factors against the dense oracle");
    add_input(verify);
    verify->add_option("--tolerance", s.tolerance, "largest accepted relative residual")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_success : exit_invalid_input;
    }

    try {
        Outcome outcome;
        if (build->parsed()) {
            outcome = cmd_build(s, in);
        } else if (decompose->parsed()) {
            outcome = cmd_decompose(s, in);
        } else if (det->parsed()) {
            outcome = cmd_det(s, in);
        } else if (identity->parsed()) {
            outcome = cmd_identity_check(s, in);
        } else {
            outcome = cmd_verify(s, in);
        }
        write_json(out, outcome.document);
        if (outcome.code == exit_tolerance) {
            err << "ellcauchy: tolerance check failed\n";
        }
        return outcome.code;
    } catch (const ValidationError &e) {
        err << "ellcauchy: invalid input: " << e.what() << '\n';
        return exit_invalid_input;
    } catch (const SingularityError &e) {
        err << "ellcauchy: " << e.what() << '\n';
        return exit_singularity;
    } catch (const BreakdownError &e) {
        err << "ellcauchy: " << e.what() << '\n';
        return exit_singularity;
    } catch (const RangeError &e) {
        err << "ellcauchy: " << e.what() << '\n';
        return exit_singularity;
    }
}

} // namespace ellcauchy::cli
