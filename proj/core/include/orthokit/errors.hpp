#pragma once

#include <stdexcept>
#include <string>

namespace orthokit {

struct OrthokitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotHermitian : OrthokitError {
    using OrthokitError::OrthokitError;
};
struct NoConvergence : OrthokitError {
    using OrthokitError::OrthokitError;
};
struct NotPSD : OrthokitError {
    using OrthokitError::OrthokitError;
};
struct DimensionMismatch : OrthokitError {
    using OrthokitError::OrthokitError;
};
struct ShapeMismatch : OrthokitError {
    using OrthokitError::OrthokitError;
};
struct ZeroOperator : OrthokitError {
    using OrthokitError::OrthokitError;
};
struct EmptyFamily : OrthokitError {
    using OrthokitError::OrthokitError;
};
struct NotNormal : OrthokitError {
    using OrthokitError::OrthokitError;
};
struct NotCommuting : OrthokitError {
    using OrthokitError::OrthokitError;
};
struct NotRank1Projection : OrthokitError {
    using OrthokitError::OrthokitError;
};
struct Refuted11Block : OrthokitError {
    using OrthokitError::OrthokitError;
};
struct NormSplitViolated : OrthokitError {
    using OrthokitError::OrthokitError;
};
struct NotFound : OrthokitError {
    using OrthokitError::OrthokitError;
};
struct WitnessNotFound : OrthokitError {
    using OrthokitError::OrthokitError;
};
struct NoSolution : OrthokitError {
    using OrthokitError::OrthokitError;
};
struct ParamConstraintViolated : OrthokitError {
    using OrthokitError::OrthokitError;
};
struct OddDimension : OrthokitError {
    using OrthokitError::OrthokitError;
};
struct TooMany : OrthokitError {
    using OrthokitError::OrthokitError;
};
struct PreconditionViolated : OrthokitError {
    using OrthokitError::OrthokitError;
};

}  // namespace orthokit
