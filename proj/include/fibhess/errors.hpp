#pragma once

#include <stdexcept>
#include <string>

namespace fibhess {

// Distinct error types so callers can tell an arithmetic fault from a
// misuse of the API.

struct DivisionByZeroError : std::domain_error {
    DivisionByZeroError() : std::domain_error("division by zero") {}
};

// Operands live in polynomial rings with different variable counts.
struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// Zero substituted into a negative exponent.
struct EvaluationError : std::domain_error {
    explicit EvaluationError(const std::string& what) : std::domain_error(what) {}
};

// Parameter outside its documented range (k < 2, n < 1, ...).
struct ParameterError : std::invalid_argument {
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Matrix order exceeds the factorial-cost oracle bound.
struct SizeError : std::length_error {
    explicit SizeError(const std::string& what) : std::length_error(what) {}
};

} // namespace fibhess
