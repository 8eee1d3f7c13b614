#ifndef DRESSEDPAIR_ERRORS_HPP_
#define DRESSEDPAIR_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace dressedpair {

// Requested parameters lie outside the model's regime (e.g. the lower
// dressed frequency would be non-positive).
class RegimeError : public std::runtime_error {
public:
    explicit RegimeError(const std::string& msg) : std::runtime_error(msg) {}
};

// A closed-form denominator is too close to zero; callers should fall back
// to the numeric eigendecomposition path.
class DegenerateSpectrumError : public std::runtime_error {
public:
    explicit DegenerateSpectrumError(const std::string& msg)
        : std::runtime_error(msg) {}
};

// A numerical routine failed to meet its accuracy contract.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// A state or trajectory point violated a density-matrix invariant.
class InvariantViolation : public NumericalError {
public:
    explicit InvariantViolation(const std::string& msg) : NumericalError(msg) {}
};

// Caller misuse of an interface (wrong basis tag, malformed state spec, ...).
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& msg) : std::invalid_argument(msg) {}
};

} // namespace dressedpair

#endif
