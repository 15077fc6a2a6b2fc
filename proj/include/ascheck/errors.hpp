#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ascheck {

/// Base class for every error this library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A vector or matrix does not have the dimension the operation requires.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Invalid parameter bounds at construction (wrong lengths, non-finite
/// values, or lower >= upper).
class BoundsError : public Error {
public:
    using Error::Error;
};

/// A physical coordinate lies outside its parameter range by more than the
/// round-trip slack. `row` is the offending sample row when known.
class OutOfBoundsError : public Error {
public:
    static constexpr std::size_t no_row = static_cast<std::size_t>(-1);

    OutOfBoundsError(const std::string& msg, std::size_t row_index = no_row)
        : Error(msg), row(row_index) {}

    std::size_t row;
};

/// Fewer samples than coefficients (N < m+1); the least-squares problem has
/// no unique solution. Add samples.
class UnderdeterminedError : public Error {
public:
    using Error::Error;
};

/// The design matrix is numerically rank deficient (estimated condition
/// number above the solver threshold). Add samples or remove redundant
/// parameters.
class RankDeficientError : public Error {
public:
    using Error::Error;
};

/// A data file does not match the expected layout (header mismatch, ragged
/// rows, unparsable numbers).
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Filesystem-level failure (open, read, write).
class IoError : public Error {
public:
    using Error::Error;
};

/// An external model process failed. Carries the physical point that was
/// being evaluated so the user can reproduce the failure.
class ModelError : public Error {
public:
    enum class Kind { nonzero_exit, timeout, parse_failure, non_finite, spawn_failure };

    ModelError(Kind k, const std::string& msg, std::vector<double> x, int status = 0)
        : Error(msg), kind(k), exit_status(status), point(std::move(x)) {}

    Kind kind;
    int exit_status;
    std::vector<double> point;
};

/// A model evaluation failed while filling a sample set. Carries the sample
/// row index and the physical point.
class EvaluationError : public Error {
public:
    EvaluationError(const std::string& msg, std::size_t row_index, std::vector<double> x)
        : Error(msg), row(row_index), point(std::move(x)) {}

    std::size_t row;
    std::vector<double> point;
};

}  // namespace ascheck
