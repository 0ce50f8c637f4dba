#ifndef ELLCAUCHY_TOOLS_JSON_WRITER_HPP
#define ELLCAUCHY_TOOLS_JSON_WRITER_HPP

#include <ostream>

#include "problem_document.hpp"

namespace ellcauchy::cli
{

/// Writes keys in insertion order and floating-point values with 17
/// significant digits. Non-finite numbers throw RangeError.
void write_json(std::ostream &out, const Json &value, int indent = 2);

} // namespace ellcauchy::cli

#endif
