#pragma once

#include <stdexcept>
#include <string>

namespace qst {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Incompatible matrix/vector/noise dimensions.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error(what) {}
};

/// An input failed a validation check (selfadjointness, unitarity, structure
/// relations, ...). Carries the offending residual when one is known.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what, double residual = -1.0)
        : Error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

/// Bad argument value (negative duration, empty list, non-slot-aligned time, ...).
class ArgumentError : public Error {
public:
    explicit ArgumentError(const std::string& what) : Error(what) {}
};

/// A numerically singular input where an invertible one is required.
class RankError : public Error {
public:
    explicit RankError(const std::string& what) : Error(what) {}
};

/// A requested tensor would exceed the configured amplitude budget.
class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& what) : Error(what) {}
};

} // namespace qst
