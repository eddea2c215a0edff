#pragma once

#include <stdexcept>
#include <string>

namespace bubblekit {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid argument values (window too short, bad quantile, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Malformed input data while reading a file or stream.
class IngestError : public Error {
public:
    using Error::Error;
};

/// A constructed value violates a type invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Regression design matrix is rank deficient or residuals vanish.
class SingularDesignError : public Error {
public:
    using Error::Error;
};

/// Interpolation requested outside the knot span.
class ExtrapolationError : public Error {
public:
    using Error::Error;
};

/// Too few points for the requested numerical operation.
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

/// Labeling rules cannot be applied (e.g. no flagged periods).
class LabelingError : public Error {
public:
    using Error::Error;
};

/// Stratified fold construction failed after the retry budget.
class StratificationError : public Error {
public:
    using Error::Error;
};

/// Model and dataset schemas disagree.
class EvaluationError : public Error {
public:
    using Error::Error;
};

/// Operation not defined for the given model kind.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// A pipeline stage could not run (missing files, empty span overlap, ...).
class PipelineError : public Error {
public:
    using Error::Error;
};

}  // namespace bubblekit
