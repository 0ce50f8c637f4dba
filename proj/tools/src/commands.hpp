#ifndef ELLCAUCHY_TOOLS_COMMANDS_HPP
#define ELLCAUCHY_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>

namespace ellcauchy::cli
{

enum ExitCode : int {
    exit_success = 0,
    exit_invalid_input = 1,
    exit_singularity = 2,
    exit_tolerance = 3,
};

inline constexpr std::uint64_t default_seed = 20240917;

/// Entry point of the `ellcauchy` tool, with the standard streams injected.
int run(int argc, const char *const *argv, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace ellcauchy::cli

#endif
