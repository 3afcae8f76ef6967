#ifndef SGZRP_ERRORS_HPP
#define SGZRP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sgzrp {

// Requested scale exceeds a hard resource cap (graph level, eigensolve size).
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Arguments violate an operation precondition (level mismatch, k > n, ...).
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// An iterative computation failed to converge (fugacity series, bisection).
struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Too little data for a statistically meaningful estimate.
struct InsufficientDataError : std::runtime_error {
    explicit InsufficientDataError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed file or stream contents.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sgzrp

#endif
