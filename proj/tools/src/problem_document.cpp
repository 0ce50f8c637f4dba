#include "problem_document.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <string_view>

#include "ellcauchy/errors.hpp"

namespace ellcauchy::cli
{

namespace
{

std::string member(const std::string &path, std::string_view key)
{
    return path.empty() ? std::string(key) : path + "." + std::string(key);
}

const Json &require_object(const Json &j, const std::string &path)
{
    if (!j.is_object()) {
        throw ValidationError(path.empty() ? "document" : path, "expected a JSON object");
    }
    return j;
}

void reject_unknown_keys(const Json &j, const std::string &path, std::initializer_list<std::string_view> allowed)
{
    for (const auto &item : j.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
            throw ValidationError(member(path, item.key()), "unknown key");
        }
    }
}

const Json &require_member(const Json &j, const std::string &path, std::string_view key)
{
    const auto it = j.find(key);
    if (it == j.end()) {
        throw ValidationError(member(path, key), "missing");
    }
    return *it;
}

double parse_real(const Json &j, const std::string &path)
{
    if (!j.is_number()) {
        throw ValidationError(path, "expected a number");
    }
    return j.get<double>();
}

Complex parse_complex(const Json &j, const std::string &path)
{
    if (!j.is_array() || j.size() != 2) {
        throw ValidationError(path, "expected a complex number as [re, im]");
    }
    return {parse_real(j[0], path + "[0]"), parse_real(j[1], path + "[1]")};
}

Complex optional_complex(const Json &j, const std::string &path, std::string_view key, Complex fallback)
{
    const auto it = j.find(key);
    return it == j.end() ? fallback : parse_complex(*it, member(path, key));
}

std::vector<Complex> parse_points(const Json &j, const std::string &path)
{
    if (!j.is_array()) {
        throw ValidationError(path, "expected an array of [re, im] pairs");
    }
    std::vector<Complex> out;
    out.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) {
        out.push_back(parse_complex(j[k], path + "[" + std::to_string(k) + "]"));
    }
    return out;
}

SigmaKernel parse_kernel(const Json &j, const std::string &path)
{
    require_object(j, path);
    const Json &variant_json = require_member(j, path, "variant");
    if (!variant_json.is_string()) {
        throw ValidationError(member(path, "variant"), "expected a string");
    }
    const std::string variant = variant_json.get<std::string>();
    try {
        if (variant == "rational") {
            reject_unknown_keys(j, path, {"variant"});
            return SigmaKernel::rational();
        }
        if (variant == "trig" || variant == "hyperbolic") {
            reject_unknown_keys(j, path, {"variant", "a"});
            const Complex a = optional_complex(j, path, "a", 1.0);
            return variant == "trig" ? SigmaKernel::trigonometric(a) : SigmaKernel::hyperbolic(a);
        }
        if (variant == "elliptic") {
            reject_unknown_keys(j, path, {"variant", "omega1", "tau"});
            const Complex omega1 = parse_complex(require_member(j, path, "omega1"), member(path, "omega1"));
            const Complex tau = parse_complex(require_member(j, path, "tau"), member(path, "tau"));
            return SigmaKernel::elliptic(LatticeParams(omega1, tau));
        }
        if (variant == "modified") {
            reject_unknown_keys(j, path, {"variant", "alpha", "beta", "base"});
            const SigmaKernel base = parse_kernel(require_member(j, path, "base"), member(path, "base"));
            return SigmaKernel::modified(base, optional_complex(j, path, "alpha", 0.0),
                                         optional_complex(j, path, "beta", 0.0));
        }
    } catch (const ValidationError &e) {
        // Library errors name the parameter, not where it sits in the document.
        if (e.field().find('.') == std::string::npos && j.contains(e.field())) {
            throw ValidationError(member(path, e.field()), std::string(e.what()).substr(e.field().size() + 2));
        }
        throw;
    }
    throw ValidationError(member(path, "variant"),
                          "unknown variant \"" + variant + "\" (rational, trig, hyperbolic, elliptic, modified)");
}

EvalOptions parse_options(const Json &document)
{
    EvalOptions out;
    const auto it = document.find("options");
    if (it == document.end()) {
        return out;
    }
    const std::string path = "options";
    require_object(*it, path);
    reject_unknown_keys(*it, path, {"series_tolerance", "max_terms", "singularity_margin"});
    if (it->contains("series_tolerance")) {
        out.series_tolerance = parse_real((*it)["series_tolerance"], "options.series_tolerance");
    }
    if (it->contains("max_terms")) {
        const Json &terms = (*it)["max_terms"];
        if (!terms.is_number_integer()) {
            throw ValidationError("options.max_terms", "expected an integer");
        }
        out.max_terms = terms.get<int>();
    }
    if (it->contains("singularity_margin")) {
        out.singularity_margin = parse_real((*it)["singularity_margin"], "options.singularity_margin");
    }
    try {
        out.validate();
    } catch (const ValidationError &e) {
        throw ValidationError(member(path, e.field()), std::string(e.what()).substr(e.field().size() + 2));
    }
    return out;
}

const Json &unwrap(const Json &document)
{
    require_object(document, "");
    const auto it = document.find("problem");
    return it == document.end() ? document : require_object(*it, "problem");
}

} // namespace

CauchyProblem parse_problem(const Json &document)
{
    const Json &j = unwrap(document);
    reject_unknown_keys(j, "", {"kernel", "q", "r", "lambda", "options"});
    const SigmaKernel kernel = parse_kernel(require_member(j, "", "kernel"), "kernel");
    std::vector<Complex> q = parse_points(require_member(j, "", "q"), "q");
    std::vector<Complex> r = parse_points(require_member(j, "", "r"), "r");

    const Json &lambda_json = require_member(j, "", "lambda");
    SpectralParameter lambda;
    if (lambda_json.is_string()) {
        if (lambda_json.get<std::string>() != "infinity") {
            throw ValidationError("lambda", "expected [re, im] or the string \"infinity\"");
        }
        lambda = at_infinity;
    } else {
        lambda = parse_complex(lambda_json, "lambda");
    }
    return CauchyProblem(std::move(q), std::move(r), lambda, kernel, parse_options(j));
}

KernelDocument parse_kernel_document(const Json &document)
{
    const Json &j = unwrap(document);
    if (j.contains("variant")) {
        return {parse_kernel(j, ""), EvalOptions{}};
    }
    reject_unknown_keys(j, "", {"kernel", "q", "r", "lambda", "options"});
    return {parse_kernel(require_member(j, "", "kernel"), "kernel"), parse_options(j)};
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json kernel_to_json(const SigmaKernel &kernel)
{
    Json out = Json::object();
    if (kernel.is_modified()) {
        out["variant"] = "modified";
        out["alpha"] = complex_to_json(kernel.alpha());
        out["beta"] = complex_to_json(kernel.beta());
        out["base"] = kernel_to_json(kernel.base_kernel());
        return out;
    }
    out["variant"] = to_string(kernel.variant());
    if (const auto *trig = std::get_if<TrigonometricKernel>(&kernel.base())) {
        out["a"] = complex_to_json(trig->scale);
    } else if (const auto *hyp = std::get_if<HyperbolicKernel>(&kernel.base())) {
        out["a"] = complex_to_json(hyp->scale);
    } else if (const LatticeParams *lattice = kernel.lattice()) {
        out["omega1"] = complex_to_json(lattice->omega1());
        out["tau"] = complex_to_json(lattice->tau());
    }
    return out;
}

Json problem_to_json(const CauchyProblem &problem)
{
    Json out = Json::object();
    out["kernel"] = kernel_to_json(problem.kernel());
    Json q = Json::array(), r = Json::array();
    for (std::size_t k = 0; k < problem.size(); ++k) {
        q.push_back(complex_to_json(problem.q()[k]));
        r.push_back(complex_to_json(problem.r()[k]));
    }
    out["q"] = std::move(q);
    out["r"] = std::move(r);
    out["lambda"] = problem.at_infinity() ? Json("infinity") : complex_to_json(problem.lambda_value());
    const EvalOptions &opts = problem.options();
    out["options"] = Json{{"series_tolerance", opts.series_tolerance},
                          {"max_terms", opts.max_terms},
                          {"singularity_margin", opts.singularity_margin}};
    return out;
}

} // namespace ellcauchy::cli
