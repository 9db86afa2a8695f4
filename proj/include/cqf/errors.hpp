#pragma once

#include <stdexcept>
#include <string>

namespace cqf {

// Math-level failures exit the CLI with code 2, I/O failures with code 3.
struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : MathError {
    using MathError::MathError;
};

// A requested characteristic moment does not exist for this distribution.
struct DivergenceError : MathError {
    using MathError::MathError;
};

struct NonConvergenceError : MathError {
    using MathError::MathError;
};

struct ResourceLimitError : MathError {
    using MathError::MathError;
};

struct MissingSymbolError : MathError {
    using MathError::MathError;
};

struct ValidationError : MathError {
    using MathError::MathError;
};

// Operation applied to a series of the wrong shape (e.g. Horner form of an
// asymmetric series).
struct ShapeError : MathError {
    using MathError::MathError;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cqf
