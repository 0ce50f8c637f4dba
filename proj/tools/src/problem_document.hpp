#ifndef ELLCAUCHY_TOOLS_PROBLEM_DOCUMENT_HPP
#define ELLCAUCHY_TOOLS_PROBLEM_DOCUMENT_HPP

#include <json.hpp>

#include "ellcauchy/cauchy_problem.hpp"

namespace ellcauchy::cli
{

using Json = nlohmann::ordered_json;

/// Parse errors name the offending field as a JSON path, e.g. "q[2]" or
/// "kernel.base.tau". A result document carrying a "problem" member is
/// accepted in place of a bare problem.
CauchyProblem parse_problem(const Json &document);

/// Kernel and options only; "q", "r" and "lambda" may be absent. Accepts a
/// problem document, a {"kernel": ...} object or a bare kernel object.
struct KernelDocument {
    SigmaKernel kernel;
    EvalOptions options;
};
KernelDocument parse_kernel_document(const Json &document);

Json complex_to_json(Complex z);
Json kernel_to_json(const SigmaKernel &kernel);
Json problem_to_json(const CauchyProblem &problem);

} // namespace ellcauchy::cli

#endif
