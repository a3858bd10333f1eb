#pragma once

#include <stdexcept>
#include <string>

namespace qwork {

// Caller supplied something outside an operation's domain.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// A computation ran but its result violates a numerical guarantee
// (norm drift, boundary leakage, ...).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qwork
