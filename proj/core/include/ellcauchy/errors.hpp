#ifndef ELLCAUCHY_ERRORS_HPP
#define ELLCAUCHY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "ellcauchy/complex.hpp"

namespace ellcauchy
{

class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: wrong sizes, bad option values, invalid lattice, bad index sets.
class ValidationError : public Error
{
  public:
    ValidationError(std::string field, const std::string &what)
        : Error(field + ": " + what), field_(std::move(field))
    {
    }
    const std::string &field() const noexcept { return field_; }

  private:
    std::string field_;
};

/// Overflow of an exponential prefactor or a trigonometric kernel.
class RangeError : public Error
{
  public:
    using Error::Error;
};

/// Which denominator class of the Cauchy-like construction hit a kernel zero.
enum class SingularityKind {
    QrDifference,    // sigma(q_i - r_j)
    LeftPrefactor,   // sigma(q_i - q_k), i < k
    RightPrefactor,  // sigma(r_l - r_j), j < l
    LambdaChain,     // sigma(lambda_k)
    LatticePoint     // argument of wp on the lattice
};

const char *to_string(SingularityKind kind) noexcept;

/// A division by a (numerically) vanishing kernel value. Indices are 1-based
/// in the message and 0-based in first()/second(); second() is unused for
/// LambdaChain (first() is then k of lambda_k) and LatticePoint.
class SingularityError : public Error
{
  public:
    SingularityError(SingularityKind kind, std::size_t first, std::size_t second, Complex argument,
                     double distance);

    SingularityKind kind() const noexcept { return kind_; }
    std::size_t first() const noexcept { return first_; }
    std::size_t second() const noexcept { return second_; }
    Complex argument() const noexcept { return argument_; }
    double distance() const noexcept { return distance_; }

  private:
    SingularityKind kind_;
    std::size_t first_;
    std::size_t second_;
    Complex argument_;
    double distance_;
};

/// Unpivoted elimination met a vanishing leading pivot.
class BreakdownError : public Error
{
  public:
    BreakdownError(std::size_t pivot, double magnitude);
    std::size_t pivot() const noexcept { return pivot_; }

  private:
    std::size_t pivot_;
};

} // namespace ellcauchy

#endif
