#include "ellcauchy/errors.hpp"

#include <sstream>

namespace ellcauchy
{

namespace
{

std::string describe(SingularityKind kind, std::size_t first, std::size_t second, Complex argument,
                     double distance)
{
    std::ostringstream os;
    os << to_string(kind) << " singularity: ";
    switch (kind) {
    case SingularityKind::QrDifference:
        os << "q_" << first + 1 << " - r_" << second + 1;
        break;
    case SingularityKind::LeftPrefactor:
        os << "q_" << first + 1 << " - q_" << second + 1;
        break;
    case SingularityKind::RightPrefactor:
        os << "r_" << second + 1 << " - r_" << first + 1;
        break;
    case SingularityKind::LambdaChain:
        os << "lambda_" << first;
        break;
    case SingularityKind::LatticePoint:
        os << "z";
        break;
    }
    os << " = " << argument << " lies within " << distance << " of a kernel zero";
    return os.str();
}

} // namespace

const char *to_string(SingularityKind kind) noexcept
{
    switch (kind) {
    case SingularityKind::QrDifference:
        return "q-r difference";
    case SingularityKind::LeftPrefactor:
        return "left prefactor";
    case SingularityKind::RightPrefactor:
        return "right prefactor";
    case SingularityKind::LambdaChain:
        return "lambda chain";
    case SingularityKind::LatticePoint:
        return "lattice point";
    }
    return "unknown";
}

SingularityError::SingularityError(SingularityKind kind, std::size_t first, std::size_t second, Complex argument,
                                   double distance)
    : Error(describe(kind, first, second, argument, distance)), kind_(kind), first_(first), second_(second),
      argument_(argument), distance_(distance)
{
}

BreakdownError::BreakdownError(std::size_t pivot, double magnitude)
    : Error("unpivoted elimination breaks down at pivot " + std::to_string(pivot + 1) + " (|pivot| = " +
            std::to_string(magnitude) + ")"),
      pivot_(pivot)
{
}

} // namespace ellcauchy
