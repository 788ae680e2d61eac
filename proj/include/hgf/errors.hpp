#pragma once

#include <stdexcept>
#include <string>

namespace hgf {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An iterative method hit its iteration cap before meeting its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Result (or an intermediate) is not representable in double precision.
class OverflowError : public std::range_error {
public:
    using std::range_error::range_error;
};

}  // namespace hgf
