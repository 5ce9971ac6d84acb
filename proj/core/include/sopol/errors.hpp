#ifndef SOPOL_ERRORS_HPP
#define SOPOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sopol {

/// Reciprocal of a series whose constant term vanishes.
class SingularSeriesError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A polynomial ODE whose operator fails the degree-preservation test.
/// Carries the diagnostic naming the first violated clause.
class UnsolvableOperatorError : public std::domain_error {
public:
    explicit UnsolvableOperatorError(const std::string& diagnostic)
        : std::domain_error("operator does not preserve degrees: " + diagnostic),
          diagnostic_(diagnostic) {}
    const std::string& diagnostic() const noexcept { return diagnostic_; }

private:
    std::string diagnostic_;
};

/// A quadrature rule whose exactness degree is below the requested integrand degree.
class InsufficientRuleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A Gram matrix that is not positive definite; names the first failing degree.
class DegenerateFormError : public std::domain_error {
public:
    DegenerateFormError(const std::string& what, int degree)
        : std::domain_error(what), degree_(degree) {}
    int degree() const noexcept { return degree_; }

private:
    int degree_ = -1;
};

/// A contour radius at or beyond the nearest singularity.
class ContourError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace sopol

#endif
