#pragma once

#include <stdexcept>
#include <string>

namespace sgst {

// Bad arguments (domain violations, malformed config). CLI exit code 1.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Numerical failure while the inputs were formally valid. CLI exit code 2.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMetricError : NumericalError {
    using NumericalError::NumericalError;
};

struct NonphysicalDeterminantError : NumericalError {
    using NumericalError::NumericalError;
};

struct SingularTransformError : NumericalError {
    using NumericalError::NumericalError;
};

struct CoordinateFrameError : ParameterError {
    using ParameterError::ParameterError;
};

struct BracketFailureError : NumericalError {
    using NumericalError::NumericalError;
};

struct IllConditionedProbeError : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace sgst
